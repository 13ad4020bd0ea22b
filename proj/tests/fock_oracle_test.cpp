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

#include "mzt/fock_oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "mzt/error.hpp"
#include "mzt/scenarios.hpp"
#include "test_support.hpp"

using namespace mzt;
using namespace mzt::fock;

TEST(LadderMatrix, structure) {
    Eigen::MatrixXcd expected(2, 2);
    expected << 0, 1, 0, 0;
    EXPECT_TRUE(ladder_matrix(1).isApprox(expected));

    for (int cutoff : {1, 2, 3, 5}) {
        const auto a = ladder_matrix(cutoff);
        const Eigen::MatrixXcd comm = a * a.adjoint() - a.adjoint() * a;
        for (int n = 0; n < cutoff; ++n) {
            for (int m = 0; m <= cutoff; ++m) {
                EXPECT_NEAR(std::abs(comm(n, m) - (n == m ? 1.0 : 0.0)), 0.0, 1e-14);
            }
        }
    }
    Eigen::VectorXcd one = Eigen::VectorXcd::Zero(4);
    one(1) = 1.0;
    const Eigen::VectorXcd lowered = ladder_matrix(3) * one;
    EXPECT_NEAR(std::abs(lowered(0) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(lowered.tail(3).norm(), 0.0, 1e-15);
    EXPECT_THROW(ladder_matrix(0), InvalidArgument);
}

TEST(OperatorMatrix, single_mode_is_the_ladder) {
    ModeRegistry reg;
    const auto m = reg.fresh_mode("a", ModeRole::SignalH);
    const auto op = operator_matrix(reg.annihilator(m), 3);
    ASSERT_EQ(op.support.size(), 1u);
    EXPECT_TRUE(Eigen::MatrixXcd(op.matrix).isApprox(ladder_matrix(3)));
}

TEST(OperatorMatrix, two_mode_beamsplitter_against_dense_kron) {
    ModeRegistry reg;
    const auto a = reg.fresh_mode("a", ModeRole::SignalH);
    const auto b = reg.fresh_mode("b", ModeRole::PortBH);
    const auto field = beamsplitter(reg.annihilator(a), reg.annihilator(b)).first;
    const auto op = operator_matrix(field, 2);

    // Dense reference built entry by entry: |na nb> with index 3 na + nb.
    Eigen::MatrixXcd ref = Eigen::MatrixXcd::Zero(9, 9);
    const double r = 1.0 / std::sqrt(2.0);
    for (int na = 0; na <= 2; ++na) {
        for (int nb = 0; nb <= 2; ++nb) {
            const int col = 3 * na + nb;
            if (na > 0) {
                ref(3 * (na - 1) + nb, col) += r * std::sqrt(na);
            }
            if (nb > 0) {
                ref(3 * na + nb - 1, col) += r * std::sqrt(nb);
            }
        }
    }
    EXPECT_TRUE(Eigen::MatrixXcd(op.matrix).isApprox(ref));
}

TEST(OperatorMatrix, dagger_is_conjugate_transpose) {
    auto rng = gen::test_rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        ModeRegistry reg;
        std::vector<ModeId> modes;
        for (int k = 0; k < 3; ++k) {
            modes.push_back(reg.fresh_mode("m" + std::to_string(k), ModeRole::SqueezerAncilla));
        }
        const auto f = gen::random_field(rng, reg, modes);
        const Eigen::MatrixXcd m = operator_matrix(f, 3).matrix;
        const Eigen::MatrixXcd md = operator_matrix(dagger(f), 3).matrix;
        EXPECT_NEAR((md - m.adjoint()).norm(), 0.0, 1e-12);
    }
}

TEST(OperatorMatrix, refuses_oversized_support) {
    ModeRegistry reg;
    LinearField f;
    for (std::size_t k = 0; k <= kMaxSupport; ++k) {
        f = f + reg.annihilator(reg.fresh_mode("m" + std::to_string(k), ModeRole::SqueezerAncilla));
    }
    EXPECT_THROW(operator_matrix(f, 3), ResourceError);
}

TEST(OracleFlux, elementary) {
    ModeRegistry reg;
    const auto ah = reg.fresh_mode("a_h", ModeRole::SignalH);
    reg.fresh_mode("a_v", ModeRole::SignalV);
    const auto photon = SinglePhotonState::from_qubit({}, reg);
    EXPECT_NEAR(oracle_flux(reg.annihilator(ah), photon), 1.0, 1e-15);
    EXPECT_THROW(oracle_flux(reg.annihilator(ah), photon, 2), InvalidArgument);
}

TEST(OracleFlux, agrees_with_closed_form_on_random_fields) {
    auto rng = gen::test_rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        ModeRegistry reg;
        std::vector<ModeId> modes;
        const int n = 1 + trial % 6;
        for (int k = 0; k < n; ++k) {
            modes.push_back(reg.fresh_mode("m" + std::to_string(k), ModeRole::SqueezerAncilla));
        }
        const auto field = gen::random_field(rng, reg, modes);
        // Photon on a random subset of the modes (at least one).
        std::vector<ModeId> excited(modes.begin(), modes.begin() + 1 + trial % n);
        const auto state = gen::random_photon(rng, reg, excited);
        const double closed = photon_flux(field, state);
        const double c3 = oracle_flux(field, state, 3);
        const double c4 = oracle_flux(field, state, 4);
        EXPECT_NEAR(c3, closed, 1e-10 * std::max(1.0, closed)) << "trial " << trial;
        EXPECT_NEAR(c3, c4, 1e-12 * std::max(1.0, c3)) << "trial " << trial;
    }
}

TEST(OracleFlux, one_arm_scenario) {
    ScenarioConfig config{Layout::OneArm, TeleporterSpec::two_mode(0.7, squeezing_to_parametric_gain(0.5)),
                          std::nullopt};
    ModeRegistry reg;
    const auto net = build_scenario(config, reg);
    const auto state = SinglePhotonState::from_qubit({Complex(0.6, 0.0), Complex(0.0, 0.8)}, reg);
    for (const auto* f : {&net.ports.a_h, &net.ports.a_v, &net.ports.b_h, &net.ports.b_v}) {
        EXPECT_NEAR(oracle_flux(*f, state), photon_flux(*f, state), 1e-10);
    }
}

TEST(OracleFlux, dark_port_of_dual_arm_at_optimal_gain) {
    const double h = squeezing_to_parametric_gain(0.5);
    ScenarioConfig config{Layout::DualArm, TeleporterSpec::two_mode(optimal_gain(h), h), std::nullopt};
    ModeRegistry reg;
    const auto net = build_scenario(config, reg);
    const auto state = SinglePhotonState::from_qubit({}, reg);
    EXPECT_NEAR(oracle_flux(net.ports.b_h, state) + oracle_flux(net.ports.b_v, state), 0.0, 1e-12);
    EXPECT_NEAR(photon_flux(net.ports.b_h, state) + photon_flux(net.ports.b_v, state), 0.0, 1e-12);
}
