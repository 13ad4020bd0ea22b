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

#include "mzt/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mzt/error.hpp"

namespace mzt {

namespace {

struct PolarizationModes {
    ModeId signal;
    ModeId vacuum;
    const char* suffix;
};

// Output fields (a_out, b_out) of one polarization.
FieldPair propagate(const ScenarioConfig& config, double eta, const PolarizationModes& modes,
                    ModeRegistry& registry) {
    const std::string suffix = modes.suffix;
    const auto arms = beamsplitter(registry.annihilator(modes.signal), registry.annihilator(modes.vacuum));

    const auto c_out = teleport(registry, arms.first, config.teleporter, allocate_ancillas(registry, "f_c_" + suffix));

    LinearField d_out = arms.second;
    switch (config.layout) {
        case Layout::OneArm:
            break;
        case Layout::Balanced: {
            const auto g = registry.fresh_mode("g_" + suffix, ModeRole::AttenuatorVacuum);
            d_out = attenuate(registry, arms.second, eta, g);
            break;
        }
        case Layout::DualArm:
            d_out = teleport(registry, arms.second, config.teleporter, allocate_ancillas(registry, "f_d_" + suffix));
            break;
    }
    return beamsplitter(c_out, d_out);
}

double resolve_eta(const ScenarioConfig& config) {
    if (config.layout != Layout::Balanced) {
        return 1.0;
    }
    return config.eta->automatic ? optimize_eta(config.teleporter) : config.eta->value;
}

}  // namespace

std::string_view to_string(Layout layout) {
    switch (layout) {
        case Layout::OneArm:
            return "a";
        case Layout::Balanced:
            return "b";
        case Layout::DualArm:
            return "c";
    }
    return "unknown";
}

void ScenarioConfig::validate() const {
    teleporter.validate();
    if (layout == Layout::Balanced) {
        if (!eta) {
            throw InvalidArgument("the balanced layout needs an attenuator transmission (fixed or auto)");
        }
        if (!eta->automatic && !(eta->value >= 0.0 && eta->value <= 1.0)) {
            throw InvalidArgument("attenuator transmission must lie in [0, 1], got " + std::to_string(eta->value));
        }
    } else if (eta) {
        throw InvalidArgument("an attenuator transmission is only meaningful for layout b");
    }
}

ScenarioNetwork build_scenario(const ScenarioConfig& config, ModeRegistry& registry) {
    config.validate();
    const auto a_h = registry.fresh_mode("a_h", ModeRole::SignalH);
    const auto a_v = registry.fresh_mode("a_v", ModeRole::SignalV);
    const auto b_h = registry.fresh_mode("b_h", ModeRole::PortBH);
    const auto b_v = registry.fresh_mode("b_v", ModeRole::PortBV);

    const double eta = resolve_eta(config);
    const auto h = propagate(config, eta, {a_h, b_h, "h"}, registry);
    const auto v = propagate(config, eta, {a_v, b_v, "v"}, registry);

    ScenarioNetwork net{{h.first, v.first, h.second, v.second}, std::nullopt};
    if (config.layout == Layout::Balanced) {
        net.eta = eta;
    }
    return net;
}

PortCounts evaluate_counts(const ScenarioConfig& config, const QubitInput& input) {
    ModeRegistry registry;
    const auto net = build_scenario(config, registry);
    return port_count(net.ports, SinglePhotonState::from_qubit(input, registry));
}

PortCounts reference_counts(const ScenarioConfig& config) {
    config.validate();
    const double lambda = config.teleporter.gain;
    const double h = config.teleporter.parametric_gain;
    const double noise = lambda * std::sqrt(h) - std::sqrt(h - 1.0);
    const double noise2 = noise * noise;
    const bool single = config.teleporter.kind == TeleporterKind::SingleSqueezer;

    switch (config.layout) {
        case Layout::OneArm:
            if (single) {
                const double extra = 0.5 * noise2 + 0.5 * lambda * lambda;
                return {0.25 * (1.0 + lambda) * (1.0 + lambda) + extra, 0.25 * (1.0 - lambda) * (1.0 - lambda) + extra};
            }
            return {0.25 * (1.0 + lambda) * (1.0 + lambda) + noise2, 0.25 * (1.0 - lambda) * (1.0 - lambda) + noise2};
        case Layout::Balanced: {
            if (single) {
                break;
            }
            const double root_eta = std::sqrt(config.eta->automatic ? optimize_eta(lambda, h) : config.eta->value);
            return {0.25 * (root_eta + lambda) * (root_eta + lambda) + noise2,
                    0.25 * (root_eta - lambda) * (root_eta - lambda) + noise2};
        }
        case Layout::DualArm:
            if (single) {
                break;
            }
            return {lambda * lambda + 2.0 * noise2, 2.0 * noise2};
    }
    throw UnsupportedCase("no closed form for layout " + std::string(to_string(config.layout)) +
                          " with a single-squeezer teleporter");
}

double optimize_eta(double gain, double parametric_gain) {
    return optimize_eta(TeleporterSpec::two_mode(gain, parametric_gain));
}

double optimize_eta(const TeleporterSpec& spec) {
    spec.validate();
    // V(t) = t lambda / (t^2/2 + lambda^2/2 + 2N) with t = sqrt(eta) peaks at
    // t^2 = lambda^2 + 4N.
    const double best = spec.gain * spec.gain + 4.0 * added_photons(spec);
    if (!(best > 0.0)) {
        return 1.0;
    }
    return std::min(1.0, best);
}

std::vector<double> gain_grid(double min, double max, std::size_t count) {
    if (count < 2 || !(min < max)) {
        throw InvalidArgument("gain grid needs min < max and at least two points");
    }
    std::vector<double> grid(count);
    const double step = (max - min) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = min + static_cast<double>(i) * step;
    }
    grid.back() = max;
    return grid;
}

SweepTable sweep_gain(const ScenarioConfig& config, std::span<const double> gains) {
    if (gains.empty()) {
        throw InvalidArgument("gain grid is empty");
    }
    if (std::adjacent_find(gains.begin(), gains.end(), [](double a, double b) { return !(a < b); }) != gains.end()) {
        throw InvalidArgument("gain grid must be strictly increasing");
    }

    SweepTable table;
    table.layout = config.layout;
    table.source = config.teleporter.kind;
    table.parametric_gain = config.teleporter.parametric_gain;
    table.eta = config.eta;
    table.rows.reserve(gains.size());

    for (const double gain : gains) {
        ScenarioConfig point = config;
        point.teleporter.gain = gain;
        ModeRegistry registry;
        const auto net = build_scenario(point, registry);

        SweepRow row;
        row.gain = gain;
        row.counts = port_count(net.ports, SinglePhotonState::from_qubit(QubitInput{}, registry));
        row.eta = net.eta;
        if (row.counts.a + row.counts.b > 0.0) {
            row.visibility = visibility(row.counts);
        }
        table.rows.push_back(row);
    }
    return table;
}

std::optional<SweepRow> peak_visibility(const SweepTable& table) {
    std::optional<SweepRow> best;
    for (const auto& row : table.rows) {
        if (row.visibility && (!best || *row.visibility > *best->visibility)) {
            best = row;
        }
    }
    return best;
}

}  // namespace mzt
