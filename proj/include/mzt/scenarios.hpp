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

// Mach-Zehnder layouts with teleporters in the arms.
//
// A single photon enters port a, port b is vacuum. The first 50:50
// beamsplitter makes arms c and d, the second recombines them in phase into
// output ports a_out and b_out. Layouts:
//
//   OneArm    teleporter in arm c only
//   Balanced  teleporter in arm c, attenuator of transmission eta in arm d
//   DualArm   identical teleporters in both arms (self-testing)
//
// Each polarization gets its own teleporter and ancilla pair.

#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mzt/mode_algebra.hpp"
#include "mzt/photometry.hpp"
#include "mzt/teleporter.hpp"

namespace mzt {

enum class Layout {
    OneArm,
    Balanced,
    DualArm,
};

std::string_view to_string(Layout layout);

/// Arm-d transmission for the balanced layout: a fixed value or the
/// visibility-optimal value at each gain.
struct EtaSetting {
    bool automatic = true;
    double value = 1.0;

    static EtaSetting optimal() { return {true, 1.0}; }
    static EtaSetting fixed(double eta) { return {false, eta}; }
};

struct ScenarioConfig {
    Layout layout = Layout::OneArm;
    TeleporterSpec teleporter;
    std::optional<EtaSetting> eta;  // present iff layout == Balanced

    /// Throws InvalidArgument for an inconsistent combination.
    void validate() const;
};

struct ScenarioNetwork {
    PortFields ports;
    std::optional<double> eta;  // the transmission actually used (Balanced only)
};

/// Registers the network's input modes in `registry` (which must not already
/// hold the standard labels) and propagates them to the output ports.
ScenarioNetwork build_scenario(const ScenarioConfig& config, ModeRegistry& registry);

/// Build on a private registry and count for the given qubit.
PortCounts evaluate_counts(const ScenarioConfig& config, const QubitInput& input = {});

/// Printed closed forms for the one-arm (two-mode, classical, single
/// squeezer), balanced (two-mode, classical) and dual-arm (two-mode,
/// classical) cases. Throws UnsupportedCase otherwise.
PortCounts reference_counts(const ScenarioConfig& config);

/// Transmission maximising the balanced-layout visibility with a two-mode
/// teleporter: min(1, lambda^2 + 4 (lambda sqrtH - sqrt(H-1))^2).
double optimize_eta(double gain, double parametric_gain);

/// Same optimum for any teleporter kind: min(1, lambda^2 + 4 N) where N is
/// the number of photons the channel adds per mode. Returns 1 when the
/// visibility is independent of eta (no signal, no noise).
double optimize_eta(const TeleporterSpec& spec);

struct SweepRow {
    double gain = 0.0;
    PortCounts counts;
    std::optional<double> visibility;  // empty where no light reaches either port
    std::optional<double> eta;
};

struct SweepTable {
    Layout layout = Layout::OneArm;
    TeleporterKind source = TeleporterKind::TwoMode;
    double parametric_gain = 1.0;
    std::optional<EtaSetting> eta;
    std::vector<SweepRow> rows;
};

/// `count` evenly spaced gains from `min` to `max` inclusive.
std::vector<double> gain_grid(double min, double max, std::size_t count);

/// Evaluates `config` at every gain of a strictly increasing grid; the
/// config's own gain is ignored.
SweepTable sweep_gain(const ScenarioConfig& config, std::span<const double> gains);

/// Row of largest defined visibility, or nullopt if none is defined.
std::optional<SweepRow> peak_visibility(const SweepTable& table);

}  // namespace mzt
