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

// Bosonic input modes and the linear (Bogoliubov) field algebra.
//
// Every field in a network is written in the Heisenberg picture as
//
//     O = sum_k ( u_k a_k + v_k a_k^dagger )
//
// over the input modes a_k of a ModeRegistry. Optical elements map such
// fields to new fields; nothing ever acts on a state vector here.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mzt {

using Complex = std::complex<double>;

enum class ModeRole {
    SignalH,
    SignalV,
    PortBH,
    PortBV,
    SqueezerAncilla,
    AttenuatorVacuum,
};

std::string_view to_string(ModeRole role);

struct ModeId {
    std::uint64_t registry = 0;
    std::size_t index = 0;
    std::string label;
    ModeRole role = ModeRole::SqueezerAncilla;

    friend bool operator==(const ModeId& a, const ModeId& b) {
        return a.registry == b.registry && a.index == b.index;
    }
};

struct Coefficients {
    Complex u;  // on the annihilator
    Complex v;  // on the creator

    bool is_zero() const { return u == Complex{} && v == Complex{}; }
    friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

class LinearField;

/// Owns the set of input modes of one network. Every registry carries a
/// process-unique tag so fields built over different registries can never
/// be mixed silently.
///
/// A registry also records which modes have been consumed by an optical
/// element (squeezer input, attenuator vacuum port). Consuming a mode twice
/// is an error: each entanglement source needs its own vacuum inputs.
class ModeRegistry {
  public:
    ModeRegistry();
    ModeRegistry(const ModeRegistry&) = delete;
    ModeRegistry& operator=(const ModeRegistry&) = delete;
    ModeRegistry(ModeRegistry&&) = default;
    ModeRegistry& operator=(ModeRegistry&&) = default;

    /// Throws InvalidArgument if `label` is already taken.
    ModeId fresh_mode(std::string label, ModeRole role);

    /// The bare input operator a_k. Throws for a mode of another registry.
    LinearField annihilator(const ModeId& mode) const;

    bool contains(const ModeId& mode) const;
    std::optional<ModeId> find(std::string_view label) const;
    std::optional<ModeId> first_with_role(ModeRole role) const;
    const ModeId& at(std::size_t index) const { return modes_.at(index); }

    /// Marks `mode` as consumed. Throws if already consumed or not ours.
    void consume(const ModeId& mode);
    bool consumed(const ModeId& mode) const;

    std::uint64_t tag() const { return tag_; }
    std::size_t size() const { return modes_.size(); }
    const std::vector<ModeId>& modes() const { return modes_; }

  private:
    std::uint64_t tag_;
    std::vector<ModeId> modes_;
    std::set<std::size_t> consumed_;
};

/// Sum over modes of u_k a_k + v_k a_k^dagger. Immutable; exact zeros are
/// never stored.
class LinearField {
  public:
    using Terms = std::map<std::size_t, Coefficients>;

    LinearField() = default;
    LinearField(std::uint64_t registry, Terms terms);

    /// Registry tag, or 0 for the empty field built without one.
    std::uint64_t registry() const { return registry_; }
    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    Coefficients coefficient(std::size_t index) const;
    Coefficients coefficient(const ModeId& mode) const { return coefficient(mode.index); }

    /// The same field with the term on `mode` removed.
    LinearField without(const ModeId& mode) const;

    friend bool operator==(const LinearField&, const LinearField&) = default;

  private:
    std::uint64_t registry_ = 0;
    Terms terms_;
};

/// coeff_a * a + coeff_b * b. The empty field (registry 0) is compatible with
/// every registry.
LinearField combine(Complex coeff_a, const LinearField& a, Complex coeff_b, const LinearField& b);

LinearField operator+(const LinearField& a, const LinearField& b);
LinearField operator-(const LinearField& a, const LinearField& b);
LinearField operator*(Complex scale, const LinearField& a);

/// Hermitian conjugate: (u, v) -> (conj v, conj u) on every mode.
LinearField dagger(const LinearField& a);

/// [A, B^dagger] = sum_k u_Ak conj(u_Bk) - v_Ak conj(v_Bk).
Complex commutator(const LinearField& a, const LinearField& b);

struct FieldPair {
    LinearField first;
    LinearField second;
};

/// 50:50 beamsplitter: ((a + b)/sqrt2, (a - b)/sqrt2).
FieldPair beamsplitter(const LinearField& a, const LinearField& b);

/// Non-degenerate parametric amplifier of gain `gain` >= 1 fed by vacuum
/// modes f1, f2:
///   e1 = sqrt(H) f1 + sqrt(H-1) f2^dagger
///   e2 = sqrt(H) f2 + sqrt(H-1) f1^dagger
FieldPair two_mode_squeezer(ModeRegistry& registry, const ModeId& f1, const ModeId& f2, double gain);

/// Degenerate amplifier: sqrt(H) f + sqrt(H-1) f^dagger (antisqueezed in X).
LinearField single_mode_squeezer(ModeRegistry& registry, const ModeId& f, double gain);

/// Beamsplitter loss of intensity transmission eta, vacuum `g` in the open
/// port: sqrt(eta) d + sqrt(1 - eta) g.
LinearField attenuate(ModeRegistry& registry, const LinearField& d, double eta, const ModeId& g);

struct QuadratureVariances {
    double x = 0.0;
    double p = 0.0;
};

/// Vacuum-normalised quadrature variances of a noise operator, with
/// X = a + a^dagger and P = -i (a - a^dagger) so that vacuum gives (1, 1).
QuadratureVariances quadrature_variances(const LinearField& noise);

}  // namespace mzt
