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

#include "mzt/photometry.hpp"

#include <cmath>
#include <string>

#include "mzt/error.hpp"

namespace mzt {

namespace {

constexpr double kNormTolerance = 1e-12;

}  // namespace

void QubitInput::validate() const {
    const double norm = std::norm(x) + std::norm(y);
    if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
        throw InvalidArgument("qubit amplitudes must satisfy |x|^2 + |y|^2 = 1, got " + std::to_string(norm));
    }
}

SinglePhotonState::SinglePhotonState(std::uint64_t registry, Amplitudes amplitudes)
    : registry_(registry), amplitudes_(std::move(amplitudes)) {
    std::erase_if(amplitudes_, [](const auto& kv) { return kv.second == Complex{}; });
    double norm = 0.0;
    for (const auto& [k, c] : amplitudes_) {
        norm += std::norm(c);
    }
    if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
        throw InvalidArgument("single-photon state is not normalised: norm " + std::to_string(norm));
    }
}

SinglePhotonState SinglePhotonState::from_qubit(const QubitInput& input, const ModeRegistry& registry) {
    input.validate();
    const auto h = registry.first_with_role(ModeRole::SignalH);
    const auto v = registry.first_with_role(ModeRole::SignalV);
    if (!h || !v) {
        throw InvalidArgument("registry has no signal-h / signal-v modes to carry the qubit");
    }
    return SinglePhotonState(registry.tag(), {{h->index, input.x}, {v->index, input.y}});
}

Complex SinglePhotonState::amplitude(std::size_t index) const {
    auto it = amplitudes_.find(index);
    return it == amplitudes_.end() ? Complex{} : it->second;
}

double photon_flux(const LinearField& field, const SinglePhotonState& state) {
    if (field.registry() != 0 && field.registry() != state.registry()) {
        throw InvalidArgument("field and state belong to different mode registries");
    }
    Complex annihilated{};
    Complex created_overlap{};
    double vacuum_noise = 0.0;
    for (const auto& [k, c] : field.terms()) {
        const Complex amp = state.amplitude(k);
        annihilated += c.u * amp;
        created_overlap += c.v * std::conj(amp);
        vacuum_noise += std::norm(c.v);
    }
    return std::norm(annihilated) + vacuum_noise + std::norm(created_overlap);
}

PortCounts port_count(const PortFields& outputs, const SinglePhotonState& state) {
    return {photon_flux(outputs.a_h, state) + photon_flux(outputs.a_v, state),
            photon_flux(outputs.b_h, state) + photon_flux(outputs.b_v, state)};
}

double visibility(const PortCounts& counts) {
    const double total = counts.a + counts.b;
    if (!(total > 0.0)) {
        throw UndefinedVisibility("visibility is undefined with no light at either port");
    }
    return (counts.a - counts.b) / total;
}

}  // namespace mzt
