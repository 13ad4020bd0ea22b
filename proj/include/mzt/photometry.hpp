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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "mzt/mode_algebra.hpp"

namespace mzt {

/// Polarization qubit x|H> + y|V> carried by one photon.
struct QubitInput {
    Complex x{1.0, 0.0};
    Complex y{0.0, 0.0};

    /// Throws InvalidArgument unless |x|^2 + |y|^2 = 1 within 1e-12.
    void validate() const;
};

/// One photon spread over any set of input modes, sum_k c_k a_k^dagger |0>,
/// with every other mode in vacuum.
class SinglePhotonState {
  public:
    using Amplitudes = std::map<std::size_t, Complex>;

    /// Throws InvalidArgument if the amplitudes are not normalised to 1e-12.
    SinglePhotonState(std::uint64_t registry, Amplitudes amplitudes);

    /// Places the qubit on the registry's signal-h / signal-v modes.
    static SinglePhotonState from_qubit(const QubitInput& input, const ModeRegistry& registry);

    std::uint64_t registry() const { return registry_; }
    const Amplitudes& amplitudes() const { return amplitudes_; }
    Complex amplitude(std::size_t index) const;

  private:
    std::uint64_t registry_;
    Amplitudes amplitudes_;
};

/// <psi| O^dagger O |psi> for a single-photon state, in closed form:
///   |sum_k u_k c_k|^2 + sum_k |v_k|^2 + |sum_k v_k conj(c_k)|^2.
double photon_flux(const LinearField& field, const SinglePhotonState& state);

/// The four output fields of an interferometer, per port and polarization.
struct PortFields {
    LinearField a_h;
    LinearField a_v;
    LinearField b_h;
    LinearField b_v;
};

struct PortCounts {
    double a = 0.0;
    double b = 0.0;
};

/// Polarization-insensitive detection: each port counts <h^dag h> + <v^dag v>.
PortCounts port_count(const PortFields& outputs, const SinglePhotonState& state);

/// (a - b) / (a + b). Throws UndefinedVisibility when a + b is zero.
double visibility(const PortCounts& counts);

}  // namespace mzt
