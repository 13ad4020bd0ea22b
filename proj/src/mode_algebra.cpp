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

#include "mzt/mode_algebra.hpp"

#include <atomic>
#include <cmath>

#include "mzt/error.hpp"

namespace mzt {

namespace {

std::atomic<std::uint64_t> next_registry_tag{1};

std::uint64_t common_registry(const LinearField& a, const LinearField& b) {
    if (a.registry() == 0) {
        return b.registry();
    }
    if (b.registry() != 0 && b.registry() != a.registry()) {
        throw InvalidArgument("fields belong to different mode registries");
    }
    return a.registry();
}

void require_gain(double gain) {
    if (!(gain >= 1.0) || !std::isfinite(gain)) {
        throw InvalidArgument("parametric gain must be finite and >= 1, got " + std::to_string(gain));
    }
}

void require_fresh(const ModeRegistry& registry, const ModeId& mode, ModeRole role) {
    if (!registry.contains(mode)) {
        throw InvalidArgument("mode '" + mode.label + "' is not registered here");
    }
    if (mode.role != role) {
        throw InvalidArgument("mode '" + mode.label + "' has role " + std::string(to_string(mode.role)) +
                              ", expected " + std::string(to_string(role)));
    }
    if (registry.consumed(mode)) {
        throw InvalidArgument("mode '" + mode.label + "' was already used by another element");
    }
}

}  // namespace

std::string_view to_string(ModeRole role) {
    switch (role) {
        case ModeRole::SignalH:
            return "signal-h";
        case ModeRole::SignalV:
            return "signal-v";
        case ModeRole::PortBH:
            return "port-b-h";
        case ModeRole::PortBV:
            return "port-b-v";
        case ModeRole::SqueezerAncilla:
            return "squeezer-ancilla";
        case ModeRole::AttenuatorVacuum:
            return "attenuator-vacuum";
    }
    return "unknown";
}

ModeRegistry::ModeRegistry() : tag_(next_registry_tag.fetch_add(1)) {}

ModeId ModeRegistry::fresh_mode(std::string label, ModeRole role) {
    if (find(label).has_value()) {
        throw InvalidArgument("duplicate mode label '" + label + "'");
    }
    ModeId id{tag_, modes_.size(), std::move(label), role};
    modes_.push_back(id);
    return id;
}

bool ModeRegistry::contains(const ModeId& mode) const {
    return mode.registry == tag_ && mode.index < modes_.size() && modes_[mode.index].label == mode.label;
}

LinearField ModeRegistry::annihilator(const ModeId& mode) const {
    if (!contains(mode)) {
        throw InvalidArgument("mode '" + mode.label + "' is not registered here");
    }
    return LinearField(tag_, {{mode.index, Coefficients{1.0, 0.0}}});
}

std::optional<ModeId> ModeRegistry::find(std::string_view label) const {
    for (const auto& m : modes_) {
        if (m.label == label) {
            return m;
        }
    }
    return std::nullopt;
}

std::optional<ModeId> ModeRegistry::first_with_role(ModeRole role) const {
    for (const auto& m : modes_) {
        if (m.role == role) {
            return m;
        }
    }
    return std::nullopt;
}

void ModeRegistry::consume(const ModeId& mode) {
    if (!contains(mode)) {
        throw InvalidArgument("mode '" + mode.label + "' is not registered here");
    }
    if (!consumed_.insert(mode.index).second) {
        throw InvalidArgument("mode '" + mode.label + "' was already used by another element");
    }
}

bool ModeRegistry::consumed(const ModeId& mode) const {
    return contains(mode) && consumed_.count(mode.index) != 0;
}

LinearField::LinearField(std::uint64_t registry, Terms terms) : registry_(registry), terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

Coefficients LinearField::coefficient(std::size_t index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Coefficients{} : it->second;
}

LinearField LinearField::without(const ModeId& mode) const {
    Terms t = terms_;
    t.erase(mode.index);
    return LinearField(registry_, std::move(t));
}

LinearField combine(Complex coeff_a, const LinearField& a, Complex coeff_b, const LinearField& b) {
    const auto registry = common_registry(a, b);
    LinearField::Terms out;
    for (const auto& [k, c] : a.terms()) {
        out[k] = Coefficients{coeff_a * c.u, coeff_a * c.v};
    }
    for (const auto& [k, c] : b.terms()) {
        auto& slot = out[k];
        slot.u += coeff_b * c.u;
        slot.v += coeff_b * c.v;
    }
    return LinearField(registry, std::move(out));
}

LinearField operator+(const LinearField& a, const LinearField& b) { return combine(1.0, a, 1.0, b); }

LinearField operator-(const LinearField& a, const LinearField& b) { return combine(1.0, a, -1.0, b); }

LinearField operator*(Complex scale, const LinearField& a) { return combine(scale, a, 0.0, LinearField{}); }

LinearField dagger(const LinearField& a) {
    LinearField::Terms out;
    for (const auto& [k, c] : a.terms()) {
        out[k] = Coefficients{std::conj(c.v), std::conj(c.u)};
    }
    return LinearField(a.registry(), std::move(out));
}

Complex commutator(const LinearField& a, const LinearField& b) {
    common_registry(a, b);
    Complex total{};
    for (const auto& [k, ca] : a.terms()) {
        const auto cb = b.coefficient(k);
        total += ca.u * std::conj(cb.u) - ca.v * std::conj(cb.v);
    }
    return total;
}

FieldPair beamsplitter(const LinearField& a, const LinearField& b) {
    const double r = 1.0 / std::sqrt(2.0);
    return {combine(r, a, r, b), combine(r, a, -r, b)};
}

FieldPair two_mode_squeezer(ModeRegistry& registry, const ModeId& f1, const ModeId& f2, double gain) {
    require_gain(gain);
    if (f1 == f2) {
        throw InvalidArgument("two-mode squeezer needs two distinct input modes");
    }
    require_fresh(registry, f1, ModeRole::SqueezerAncilla);
    require_fresh(registry, f2, ModeRole::SqueezerAncilla);
    registry.consume(f1);
    registry.consume(f2);

    const double direct = std::sqrt(gain);
    const double conjugate = std::sqrt(gain - 1.0);
    const auto a1 = registry.annihilator(f1);
    const auto a2 = registry.annihilator(f2);
    return {combine(direct, a1, conjugate, dagger(a2)), combine(direct, a2, conjugate, dagger(a1))};
}

LinearField single_mode_squeezer(ModeRegistry& registry, const ModeId& f, double gain) {
    require_gain(gain);
    require_fresh(registry, f, ModeRole::SqueezerAncilla);
    registry.consume(f);
    const auto a = registry.annihilator(f);
    return combine(std::sqrt(gain), a, std::sqrt(gain - 1.0), dagger(a));
}

LinearField attenuate(ModeRegistry& registry, const LinearField& d, double eta, const ModeId& g) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw InvalidArgument("attenuator transmission must lie in [0, 1], got " + std::to_string(eta));
    }
    require_fresh(registry, g, ModeRole::AttenuatorVacuum);
    registry.consume(g);
    return combine(std::sqrt(eta), d, std::sqrt(1.0 - eta), registry.annihilator(g));
}

QuadratureVariances quadrature_variances(const LinearField& noise) {
    QuadratureVariances out;
    for (const auto& [k, c] : noise.terms()) {
        out.x += std::norm(c.u + std::conj(c.v));
        out.p += std::norm(c.u - std::conj(c.v));
    }
    return out;
}

}  // namespace mzt
