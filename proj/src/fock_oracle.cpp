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

#include <algorithm>
#include <cmath>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>

#include "mzt/error.hpp"

namespace mzt::fock {

namespace {

SparseMatrix sparse_identity(Eigen::Index n) {
    SparseMatrix id(n, n);
    id.setIdentity();
    return id;
}

// I (x) ... (x) a (x) ... (x) I with the ladder in slot `position`.
SparseMatrix embedded_ladder(std::size_t position, std::size_t modes, int cutoff) {
    const Eigen::Index local = cutoff + 1;
    const SparseMatrix ladder = ladder_matrix(cutoff).sparseView();
    SparseMatrix out = position == 0 ? ladder : sparse_identity(local);
    for (std::size_t slot = 1; slot < modes; ++slot) {
        const SparseMatrix next = Eigen::kroneckerProduct(out, slot == position ? ladder : sparse_identity(local));
        out = next;
    }
    return out;
}

Eigen::Index dimension(std::size_t modes, int cutoff) {
    Eigen::Index dim = 1;
    for (std::size_t i = 0; i < modes; ++i) {
        dim *= cutoff + 1;
    }
    return dim;
}

}  // namespace

Eigen::MatrixXcd ladder_matrix(int cutoff) {
    if (cutoff < 1) {
        throw InvalidArgument("Fock cutoff must be >= 1");
    }
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
    for (int n = 1; n <= cutoff; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

FockOperator operator_matrix(const LinearField& field, int cutoff, const std::vector<std::size_t>& extra_support) {
    if (cutoff < 1) {
        throw InvalidArgument("Fock cutoff must be >= 1");
    }
    std::vector<std::size_t> support = extra_support;
    for (const auto& [k, c] : field.terms()) {
        support.push_back(k);
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    if (support.size() > kMaxSupport) {
        throw ResourceError("Fock oracle refuses " + std::to_string(support.size()) + " modes (limit " +
                            std::to_string(kMaxSupport) + ")");
    }

    const auto dim = dimension(support.size(), cutoff);
    FockOperator op{support, cutoff, SparseMatrix(dim, dim)};
    for (std::size_t pos = 0; pos < support.size(); ++pos) {
        const auto c = field.coefficient(support[pos]);
        if (c.is_zero()) {
            continue;
        }
        const SparseMatrix a = embedded_ladder(pos, support.size(), cutoff);
        const SparseMatrix a_dag = a.adjoint();
        op.matrix += c.u * a + c.v * a_dag;
    }
    op.matrix.makeCompressed();
    return op;
}

Eigen::VectorXcd state_vector(const SinglePhotonState& state, const std::vector<std::size_t>& support, int cutoff) {
    const auto dim = dimension(support.size(), cutoff);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    for (const auto& [mode, amp] : state.amplitudes()) {
        const auto it = std::find(support.begin(), support.end(), mode);
        if (it == support.end()) {
            throw InvalidArgument("state has an excitation outside the operator support");
        }
        const auto pos = static_cast<std::size_t>(it - support.begin());
        // One photon in slot `pos`: digit 1 at base-(cutoff+1) place (n-1-pos).
        psi(dimension(support.size() - 1 - pos, cutoff)) = amp;
    }
    return psi;
}

double oracle_flux(const LinearField& field, const SinglePhotonState& state, int cutoff) {
    if (cutoff < 3) {
        throw InvalidArgument("oracle cutoff must be >= 3");
    }
    if (field.registry() != 0 && field.registry() != state.registry()) {
        throw InvalidArgument("field and state belong to different mode registries");
    }
    std::vector<std::size_t> excited;
    for (const auto& [mode, amp] : state.amplitudes()) {
        excited.push_back(mode);
    }
    const auto op = operator_matrix(field, cutoff, excited);
    const Eigen::VectorXcd psi = state_vector(state, op.support, cutoff);
    const Eigen::VectorXcd out = op.matrix * psi;
    return out.squaredNorm();
}

}  // namespace mzt::fock
