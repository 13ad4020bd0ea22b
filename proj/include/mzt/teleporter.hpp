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

// Continuous-variable teleporter as a single-mode Heisenberg channel.
//
// One teleporter acts on one polarization mode and needs its own pair of
// vacuum ancillas. With feedforward gain lambda and parametric gain H:
//
//   two-mode          c_T = lambda c + (lambda sqrtH - sqrt(H-1)) f1^dagger
//                           + (sqrtH - lambda sqrt(H-1)) f2
//   single squeezer   c_S = lambda c + [ (lambda sqrtH - sqrt(H-1)) f1^dagger
//                           + (sqrtH - lambda sqrt(H-1)) f1
//                           + lambda f2^dagger + f2 ] / sqrt2
//   classical         two-mode with H = 1

#pragma once

#include <string>
#include <string_view>

#include "mzt/mode_algebra.hpp"

namespace mzt {

enum class TeleporterKind {
    TwoMode,
    SingleSqueezer,
    Classical,
};

std::string_view to_string(TeleporterKind kind);

struct TeleporterSpec {
    TeleporterKind kind = TeleporterKind::TwoMode;
    double gain = 1.0;             // feedforward gain lambda >= 0
    double parametric_gain = 1.0;  // H >= 1; exactly 1 for Classical

    static TeleporterSpec two_mode(double gain, double parametric_gain) {
        return {TeleporterKind::TwoMode, gain, parametric_gain};
    }
    static TeleporterSpec single_squeezer(double gain, double parametric_gain) {
        return {TeleporterKind::SingleSqueezer, gain, parametric_gain};
    }
    static TeleporterSpec classical(double gain) { return {TeleporterKind::Classical, gain, 1.0}; }

    /// Throws InvalidArgument on negative gain, H < 1, or Classical with H != 1.
    void validate() const;
};

struct Ancillas {
    ModeId first;
    ModeId second;
};

/// Registers two fresh squeezer-ancilla modes named `<prefix>_1`, `<prefix>_2`.
Ancillas allocate_ancillas(ModeRegistry& registry, const std::string& prefix);

LinearField teleport_two_mode(ModeRegistry& registry, const LinearField& input, const TeleporterSpec& spec,
                              const Ancillas& ancillas);

LinearField teleport_single_squeezer(ModeRegistry& registry, const LinearField& input, const TeleporterSpec& spec,
                                     const Ancillas& ancillas);

/// The two-mode channel assembled from its physical parts: an EPR pair,
/// a 50:50 mix of the input with one beam, ideal homodyne X and P
/// measurements of the two mix outputs, and a displacement of the other EPR
/// beam by lambda * sqrt2 times the complex photocurrent (X + iP)/2.
///
/// Agrees with teleport_two_mode up to the sign of the f1^dagger term.
LinearField teleport_composed(ModeRegistry& registry, const LinearField& input, const TeleporterSpec& spec,
                              const Ancillas& ancillas);

/// Dispatches on spec.kind (Classical and TwoMode use the two-mode map).
LinearField teleport(ModeRegistry& registry, const LinearField& input, const TeleporterSpec& spec,
                     const Ancillas& ancillas);

/// Gain at which the two-mode channel adds no creation-operator noise:
/// sqrt(H-1)/sqrt(H).
double optimal_gain(double parametric_gain);

/// Parametric gain giving a fractional noise-variance reduction `squeezing`,
/// i.e. (sqrtH - sqrt(H-1))^2 = 1 - s. Closed form H = (2-s)^2 / (4(1-s)).
double squeezing_to_parametric_gain(double squeezing);
double parametric_gain_to_squeezing(double parametric_gain);

/// Channel output minus the lambda * input term, evaluated on a private
/// probe network. The returned field carries only ancilla terms.
LinearField teleporter_noise(const TeleporterSpec& spec);

/// Mean number of photons the channel adds to a vacuum input,
/// sum_k |v_k|^2 over the noise field.
double added_photons(const TeleporterSpec& spec);

/// Average coherent-state fidelity at unity gain,
/// F = 2 / sqrt((2 + V_X)(2 + V_P)) with the noise quadrature variances.
/// Throws InvalidArgument unless spec.gain == 1.
double coherent_fidelity(const TeleporterSpec& spec);

}  // namespace mzt
