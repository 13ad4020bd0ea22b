// Copyright 2026 The mzteleport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mzt/teleporter.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "mzt/error.hpp"
#include "mzt/photometry.hpp"

using namespace mzt;

namespace {

constexpr double kTol = 1e-12;

struct Probe {
    ModeRegistry reg;
    ModeId input;
    Ancillas ancillas;

    Probe()
        : input(reg.fresh_mode("c", ModeRole::SignalH)), ancillas(allocate_ancillas(reg, "f")) {}
    LinearField c() const { return reg.annihilator(input); }
};

}  // namespace

TEST(TeleporterSpec, classical_forces_unit_parametric_gain) {
    EXPECT_NO_THROW(TeleporterSpec::classical(0.7).validate());
    EXPECT_THROW((TeleporterSpec{TeleporterKind::Classical, 1.0, 1.5}.validate()), InvalidArgument);
    EXPECT_THROW(TeleporterSpec::two_mode(-0.1, 2.0).validate(), InvalidArgument);
    EXPECT_THROW(TeleporterSpec::two_mode(1.0, 0.5).validate(), InvalidArgument);
}

TEST(TeleportTwoMode, classical_unit_gain) {
    Probe p;
    const auto out = teleport_two_mode(p.reg, p.c(), TeleporterSpec::two_mode(1.0, 1.0), p.ancillas);
    EXPECT_EQ(out.coefficient(p.input).u, Complex(1.0));
    EXPECT_EQ(out.coefficient(p.ancillas.first).v, Complex(1.0));
    EXPECT_EQ(out.coefficient(p.ancillas.first).u, Complex(0.0));
    EXPECT_EQ(out.coefficient(p.ancillas.second).u, Complex(1.0));
    EXPECT_EQ(out.support_size(), 3u);
}

TEST(TeleportTwoMode, pure_attenuation_point) {
    Probe p;
    const double h = 1.125;
    const double lambda = optimal_gain(h);
    EXPECT_NEAR(lambda, 1.0 / 3.0, 1e-15);
    const auto out = teleport_two_mode(p.reg, p.c(), TeleporterSpec::two_mode(lambda, h), p.ancillas);
    EXPECT_NEAR(std::abs(out.coefficient(p.ancillas.first).v), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(out.coefficient(p.ancillas.first).u), 0.0, 1e-15);

    // Same map as an attenuator with eta = lambda^2 and the f2 ancilla as its vacuum.
    ModeRegistry ref_reg;
    const auto c = ref_reg.fresh_mode("c", ModeRole::SignalH);
    const auto g = ref_reg.fresh_mode("g", ModeRole::AttenuatorVacuum);
    const auto att = attenuate(ref_reg, ref_reg.annihilator(c), lambda * lambda, g);
    EXPECT_NEAR(std::abs(out.coefficient(p.input).u - att.coefficient(c).u), 0.0, kTol);
    EXPECT_NEAR(std::abs(out.coefficient(p.ancillas.second).u - att.coefficient(g).u), 0.0, kTol);
}

TEST(TeleportTwoMode, canonical_over_grid) {
    for (double lambda : {0.0, 0.3, 1.0, 1.5}) {
        for (double h : {1.0, 1.125, 3.025, 50.0}) {
            Probe p;
            const auto out = teleport_two_mode(p.reg, p.c(), TeleporterSpec::two_mode(lambda, h), p.ancillas);
            EXPECT_NEAR(std::abs(commutator(out, out) - 1.0), 0.0, 1e-12 * h) << lambda << " " << h;
        }
    }
}

TEST(TeleportTwoMode, rejects_reused_ancillas) {
    Probe p;
    const auto spec = TeleporterSpec::two_mode(1.0, 2.0);
    teleport_two_mode(p.reg, p.c(), spec, p.ancillas);
    EXPECT_THROW(teleport_two_mode(p.reg, p.c(), spec, p.ancillas), InvalidArgument);
    EXPECT_THROW(teleport_two_mode(p.reg, p.c(), spec, {p.input, p.input}), InvalidArgument);
    EXPECT_THROW(teleport_two_mode(p.reg, p.c(), TeleporterSpec::single_squeezer(1.0, 2.0),
                                   allocate_ancillas(p.reg, "g")),
                 InvalidArgument);
}

TEST(TeleportTwoMode, classical_kind_equals_two_mode_at_unit_gain) {
    for (double lambda : {0.0, 0.45, 1.2}) {
        Probe p1;
        Probe p2;
        const auto a = teleport_two_mode(p1.reg, p1.c(), TeleporterSpec::classical(lambda), p1.ancillas);
        const auto b = teleport_two_mode(p2.reg, p2.c(), TeleporterSpec::two_mode(lambda, 1.0), p2.ancillas);
        EXPECT_EQ(a.terms(), b.terms());
    }
}

TEST(TeleportTwoMode, strong_squeezing_unity_gain_limit) {
    double previous = INFINITY;
    for (double h : {10.0, 100.0, 1e3, 1e4, 1e6}) {
        Probe p;
        const auto out = teleport_two_mode(p.reg, p.c(), TeleporterSpec::two_mode(1.0, h), p.ancillas);
        const auto noise = out.without(p.input);
        double weight2 = 0.0;
        for (const auto& [k, c] : noise.terms()) {
            weight2 += std::norm(c.u) + std::norm(c.v);
        }
        const double weight = std::sqrt(weight2);
        EXPECT_EQ(out.coefficient(p.input).u, Complex(1.0));
        EXPECT_LE(weight, 1.0 / std::sqrt(h)) << h;
        EXPECT_LT(weight, previous);
        previous = weight;
        if (h == 1e4) {
            EXPECT_LE(std::abs(out.coefficient(p.ancillas.first).v), 0.006);
        }
    }
}

TEST(TeleportSingleSqueezer, zero_gain) {
    Probe p;
    const double h = 2.0;
    const auto out = teleport_single_squeezer(p.reg, p.c(), TeleporterSpec::single_squeezer(0.0, h), p.ancillas);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_TRUE(out.coefficient(p.input).is_zero());
    EXPECT_NEAR(out.coefficient(p.ancillas.first).v.real(), -r * std::sqrt(h - 1.0), kTol);
    EXPECT_NEAR(out.coefficient(p.ancillas.first).u.real(), r * std::sqrt(h), kTol);
    EXPECT_NEAR(out.coefficient(p.ancillas.second).u.real(), r, kTol);
    EXPECT_EQ(out.coefficient(p.ancillas.second).v, Complex(0.0));
}

TEST(TeleportSingleSqueezer, unity_gain_noise_is_x_only) {
    Probe p;
    const auto out =
        teleport_single_squeezer(p.reg, p.c(), TeleporterSpec::single_squeezer(1.0, 2.53125), p.ancillas);
    const auto var = quadrature_variances(out.without(p.input));
    EXPECT_NEAR(var.x, 2.25, kTol);
    EXPECT_NEAR(var.p, 0.0, kTol);
}

TEST(TeleportSingleSqueezer, canonical) {
    Probe p;
    const auto out =
        teleport_single_squeezer(p.reg, p.c(), TeleporterSpec::single_squeezer(0.7, 2.53125), p.ancillas);
    EXPECT_NEAR(std::abs(commutator(out, out) - 1.0), 0.0, kTol);
    EXPECT_THROW(teleport_single_squeezer(p.reg, p.c(), TeleporterSpec::two_mode(0.7, 2.0),
                                          allocate_ancillas(p.reg, "g")),
                 InvalidArgument);
}

TEST(TeleportComposed, matches_direct_map_in_magnitude) {
    for (double lambda : {0.0, 0.5, 1.0, 1.3}) {
        for (double h : {1.0, 1.125, 3.025}) {
            Probe direct;
            Probe built;
            const auto spec = TeleporterSpec::two_mode(lambda, h);
            const auto a = teleport_two_mode(direct.reg, direct.c(), spec, direct.ancillas);
            const auto b = teleport_composed(built.reg, built.c(), spec, built.ancillas);
            for (std::size_t k = 0; k < 3; ++k) {
                EXPECT_NEAR(std::abs(a.coefficient(k).u), std::abs(b.coefficient(k).u), kTol);
                EXPECT_NEAR(std::abs(a.coefficient(k).v), std::abs(b.coefficient(k).v), kTol);
            }
            EXPECT_NEAR(std::abs(commutator(b, b) - 1.0), 0.0, kTol);
            // Observable: photons out for one photon in.
            const SinglePhotonState photon(direct.reg.tag(), {{0, 1.0}});
            const SinglePhotonState photon_b(built.reg.tag(), {{0, 1.0}});
            EXPECT_NEAR(photon_flux(a, photon), photon_flux(b, photon_b), kTol);
            const auto va = quadrature_variances(a.without(direct.input));
            const auto vb = quadrature_variances(b.without(built.input));
            EXPECT_NEAR(va.x, vb.x, kTol);
            EXPECT_NEAR(va.p, vb.p, kTol);
        }
    }
}

TEST(TeleportComposed, limits) {
    {
        Probe p;
        const auto out = teleport_composed(p.reg, p.c(), TeleporterSpec::two_mode(1.0, 1e4), p.ancillas);
        EXPECT_NEAR(std::abs(out.coefficient(p.input).u), 1.0, kTol);
        EXPECT_LE(std::abs(out.coefficient(p.ancillas.first).v) + std::abs(out.coefficient(p.ancillas.second).v),
                  0.006);
    }
    {
        Probe p;
        const auto out = teleport_composed(p.reg, p.c(), TeleporterSpec::two_mode(1.0, 1.0), p.ancillas);
        const auto var = quadrature_variances(out.without(p.input));
        EXPECT_NEAR(var.x, 2.0, kTol);
        EXPECT_NEAR(var.p, 2.0, kTol);
    }
}

TEST(OptimalGain, values) {
    EXPECT_EQ(optimal_gain(1.0), 0.0);
    EXPECT_NEAR(optimal_gain(1.125), 1.0 / 3.0, 1e-15);
    for (double h : {1.0, 1.125, 2.53125, 3.025, 1e3}) {
        const double l = optimal_gain(h);
        EXPECT_NEAR(l * std::sqrt(h) - std::sqrt(h - 1.0), 0.0, 1e-12);
    }
}

TEST(Squeezing, conversions) {
    EXPECT_EQ(squeezing_to_parametric_gain(0.0), 1.0);
    EXPECT_NEAR(squeezing_to_parametric_gain(0.5), 1.125, 1e-15);
    EXPECT_NEAR(squeezing_to_parametric_gain(0.875), 2.53125, 1e-14);
    EXPECT_NEAR(squeezing_to_parametric_gain(0.9), 3.025, 1e-14);
    EXPECT_THROW(squeezing_to_parametric_gain(1.0), InvalidArgument);
    EXPECT_THROW(squeezing_to_parametric_gain(-0.1), InvalidArgument);
    for (double s : {0.0, 0.1, 0.25, 0.5, 0.75, 0.875, 0.9, 0.9999}) {
        const double h = squeezing_to_parametric_gain(s);
        const double residual = std::sqrt(h) - std::sqrt(h - 1.0);
        EXPECT_NEAR(residual * residual, 1.0 - s, 1e-12) << s;
        EXPECT_NEAR(parametric_gain_to_squeezing(h), s, 1e-12) << s;
    }
}

TEST(CoherentFidelity, anchors) {
    EXPECT_NEAR(coherent_fidelity(TeleporterSpec::classical(1.0)), 0.5, 1e-12);
    EXPECT_NEAR(coherent_fidelity(TeleporterSpec::two_mode(1.0, 1.125)), 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(coherent_fidelity(TeleporterSpec::single_squeezer(1.0, 2.53125)), 2.0 / std::sqrt(8.5), 1e-12);
    EXPECT_NEAR(coherent_fidelity(TeleporterSpec::single_squeezer(1.0, 2.53125)), 0.686, 5e-4);
    EXPECT_THROW(coherent_fidelity(TeleporterSpec::two_mode(0.9, 1.125)), InvalidArgument);
}

TEST(AddedPhotons, two_mode_and_single) {
    const double h = 3.025;
    for (double lambda : {0.0, 0.4, 1.0}) {
        const double a = lambda * std::sqrt(h) - std::sqrt(h - 1.0);
        EXPECT_NEAR(added_photons(TeleporterSpec::two_mode(lambda, h)), a * a, kTol);
        EXPECT_NEAR(added_photons(TeleporterSpec::single_squeezer(lambda, h)), 0.5 * (a * a + lambda * lambda), kTol);
    }
}
