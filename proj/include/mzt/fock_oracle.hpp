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

// Brute-force check of photon-counting expectations in a truncated Fock
// space. Field operators become explicit matrices on the tensor product of
// the modes they touch, the input photon becomes an explicit state vector,
// and <psi|M^dagger M|psi> is a plain vector norm.
//
// The input has at most one photon per mode and M is linear in ladder
// operators, so M|psi> never exceeds two photons per mode: any cutoff >= 2
// reproduces the untruncated value exactly.

#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <cstddef>
#include <vector>

#include "mzt/mode_algebra.hpp"
#include "mzt/photometry.hpp"

namespace mzt::fock {

inline constexpr std::size_t kMaxSupport = 8;
inline constexpr int kDefaultCutoff = 3;

using SparseMatrix = Eigen::SparseMatrix<Complex>;

struct FockOperator {
    std::vector<std::size_t> support;  // mode indices, ascending; first is the most significant factor
    int cutoff = kDefaultCutoff;
    SparseMatrix matrix;
};

/// Truncated annihilator, a[n-1, n] = sqrt(n), of size (cutoff+1)^2.
Eigen::MatrixXcd ladder_matrix(int cutoff);

/// sum_k (u_k A_k + v_k A_k^dagger) on the product space of the field's
/// modes plus `extra_support`, identity elsewhere. Throws ResourceError
/// when more than kMaxSupport modes are involved.
FockOperator operator_matrix(const LinearField& field, int cutoff, const std::vector<std::size_t>& extra_support = {});

/// The single-photon state as a vector on `support`.
Eigen::VectorXcd state_vector(const SinglePhotonState& state, const std::vector<std::size_t>& support, int cutoff);

/// <psi| O^dagger O |psi> by explicit matrix-vector products. Cutoff must be >= 3.
double oracle_flux(const LinearField& field, const SinglePhotonState& state, int cutoff = kDefaultCutoff);

}  // namespace mzt::fock
