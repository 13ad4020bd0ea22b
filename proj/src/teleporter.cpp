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

#include <cmath>

#include "mzt/error.hpp"

namespace mzt {

namespace {

void require_kind(const TeleporterSpec& spec, bool ok, const char* what) {
    spec.validate();
    if (!ok) {
        throw InvalidArgument(std::string(what) + " does not accept a " + std::string(to_string(spec.kind)) +
                              " teleporter");
    }
}

void claim(ModeRegistry& registry, const Ancillas& ancillas) {
    if (ancillas.first == ancillas.second) {
        throw InvalidArgument("teleporter ancillas must be two distinct modes");
    }
    for (const auto* m : {&ancillas.first, &ancillas.second}) {
        if (registry.contains(*m) && m->role != ModeRole::SqueezerAncilla) {
            throw InvalidArgument("mode '" + m->label + "' is not a squeezer ancilla");
        }
    }
    registry.consume(ancillas.first);
    registry.consume(ancillas.second);
}

}  // namespace

std::string_view to_string(TeleporterKind kind) {
    switch (kind) {
        case TeleporterKind::TwoMode:
            return "two-mode";
        case TeleporterKind::SingleSqueezer:
            return "single";
        case TeleporterKind::Classical:
            return "none";
    }
    return "unknown";
}

void TeleporterSpec::validate() const {
    if (!(gain >= 0.0) || !std::isfinite(gain)) {
        throw InvalidArgument("feedforward gain must be finite and >= 0, got " + std::to_string(gain));
    }
    if (!(parametric_gain >= 1.0) || !std::isfinite(parametric_gain)) {
        throw InvalidArgument("parametric gain must be finite and >= 1, got " + std::to_string(parametric_gain));
    }
    if (kind == TeleporterKind::Classical && parametric_gain != 1.0) {
        throw InvalidArgument("a classical teleporter has no entanglement: parametric gain must be exactly 1");
    }
}

Ancillas allocate_ancillas(ModeRegistry& registry, const std::string& prefix) {
    auto first = registry.fresh_mode(prefix + "_1", ModeRole::SqueezerAncilla);
    auto second = registry.fresh_mode(prefix + "_2", ModeRole::SqueezerAncilla);
    return {std::move(first), std::move(second)};
}

LinearField teleport_two_mode(ModeRegistry& registry, const LinearField& input, const TeleporterSpec& spec,
                              const Ancillas& ancillas) {
    require_kind(spec, spec.kind != TeleporterKind::SingleSqueezer, "teleport_two_mode");
    claim(registry, ancillas);

    const double lambda = spec.gain;
    const double root_h = std::sqrt(spec.parametric_gain);
    const double root_h1 = std::sqrt(spec.parametric_gain - 1.0);
    const auto f1 = registry.annihilator(ancillas.first);
    const auto f2 = registry.annihilator(ancillas.second);

    const auto noise = combine(lambda * root_h - root_h1, dagger(f1), root_h - lambda * root_h1, f2);
    return combine(lambda, input, 1.0, noise);
}

LinearField teleport_single_squeezer(ModeRegistry& registry, const LinearField& input, const TeleporterSpec& spec,
                                     const Ancillas& ancillas) {
    require_kind(spec, spec.kind == TeleporterKind::SingleSqueezer, "teleport_single_squeezer");
    claim(registry, ancillas);

    const double lambda = spec.gain;
    const double root_h = std::sqrt(spec.parametric_gain);
    const double root_h1 = std::sqrt(spec.parametric_gain - 1.0);
    const auto f1 = registry.annihilator(ancillas.first);
    const auto f2 = registry.annihilator(ancillas.second);

    const auto squeezed_part = combine(lambda * root_h - root_h1, dagger(f1), root_h - lambda * root_h1, f1);
    const auto vacuum_part = combine(lambda, dagger(f2), 1.0, f2);
    return combine(lambda, input, 1.0 / std::sqrt(2.0), squeezed_part + vacuum_part);
}

LinearField teleport_composed(ModeRegistry& registry, const LinearField& input, const TeleporterSpec& spec,
                              const Ancillas& ancillas) {
    require_kind(spec, spec.kind != TeleporterKind::SingleSqueezer, "teleport_composed");
    if (ancillas.first == ancillas.second) {
        throw InvalidArgument("teleporter ancillas must be two distinct modes");
    }
    const auto epr = two_mode_squeezer(registry, ancillas.first, ancillas.second, spec.parametric_gain);
    const Complex i{0.0, 1.0};

    // Sender: mix with the first EPR beam, read P on the sum port and X on
    // the difference port.
    const auto mix = beamsplitter(input, epr.first);
    const auto x_measured = mix.second + dagger(mix.second);
    const auto p_measured = -i * (mix.first - dagger(mix.first));
    const auto photocurrent = combine(0.5, x_measured, 0.5 * i, p_measured);

    // Receiver: displace the second EPR beam.
    return combine(1.0, epr.second, spec.gain * std::sqrt(2.0), photocurrent);
}

LinearField teleport(ModeRegistry& registry, const LinearField& input, const TeleporterSpec& spec,
                     const Ancillas& ancillas) {
    if (spec.kind == TeleporterKind::SingleSqueezer) {
        return teleport_single_squeezer(registry, input, spec, ancillas);
    }
    return teleport_two_mode(registry, input, spec, ancillas);
}

double optimal_gain(double parametric_gain) {
    if (!(parametric_gain >= 1.0)) {
        throw InvalidArgument("parametric gain must be >= 1");
    }
    return std::sqrt(parametric_gain - 1.0) / std::sqrt(parametric_gain);
}

double squeezing_to_parametric_gain(double squeezing) {
    if (!(squeezing >= 0.0 && squeezing < 1.0)) {
        throw InvalidArgument("squeezing fraction must lie in [0, 1), got " + std::to_string(squeezing));
    }
    return (2.0 - squeezing) * (2.0 - squeezing) / (4.0 * (1.0 - squeezing));
}

double parametric_gain_to_squeezing(double parametric_gain) {
    if (!(parametric_gain >= 1.0) || !std::isfinite(parametric_gain)) {
        throw InvalidArgument("parametric gain must be finite and >= 1");
    }
    // sqrtH - sqrt(H-1) == 1 / (sqrtH + sqrt(H-1)), stable for large H.
    const double residual = 1.0 / (std::sqrt(parametric_gain) + std::sqrt(parametric_gain - 1.0));
    return 1.0 - residual * residual;
}

LinearField teleporter_noise(const TeleporterSpec& spec) {
    ModeRegistry probe_registry;
    const auto probe = probe_registry.fresh_mode("probe", ModeRole::SignalH);
    const auto ancillas = allocate_ancillas(probe_registry, "f");
    const auto out = teleport(probe_registry, probe_registry.annihilator(probe), spec, ancillas);
    return out.without(probe);
}

double added_photons(const TeleporterSpec& spec) {
    const auto noise = teleporter_noise(spec);
    double total = 0.0;
    for (const auto& [k, c] : noise.terms()) {
        total += std::norm(c.v);
    }
    return total;
}

double coherent_fidelity(const TeleporterSpec& spec) {
    spec.validate();
    if (spec.gain != 1.0) {
        throw InvalidArgument("coherent-state fidelity is only defined at unity gain");
    }
    const auto var = quadrature_variances(teleporter_noise(spec));
    return 2.0 / std::sqrt((2.0 + var.x) * (2.0 + var.p));
}

}  // namespace mzt
