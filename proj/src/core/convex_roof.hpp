// Copyright 2026 The tetrafill Authors
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

// Convex-roof extension of F4 to four-qubit mixed states.
//
// Write rho = W W^dagger with W = [sqrt(p_1) e_1, ..., sqrt(p_r) e_r] from the
// eigendecomposition. Every m-element pure-state decomposition of rho is
// psi~_i = sum_k U_ik W_k for an m x r isometry U (U^dagger U = 1), with weight
// |psi~_i|^2. The optimizer searches over U with Givens rotations between
// pairs of rows, which keep U an isometry exactly, and a bracketed
// golden-section search on the rotation angle. Local search cannot certify a
// global minimum, so the result is an upper bound on F4(rho).

#pragma once

#include <cstdint>
#include <vector>

#include "measures.hpp"
#include "quantum_state.hpp"

namespace tetrafill {

/// Eigenvalues above this count toward the rank.
inline constexpr double kRankTol = 1e-10;

class MixedState {
  public:
    /// Requires a 16 x 16 density matrix.
    static MixedState make(const DensityMatrix &rho);

    const DensityMatrix &rho() const noexcept { return rho_; }
    int rank() const noexcept { return static_cast<int>(weighted_eigenvectors_.cols()); }
    /// 16 x rank matrix W with rho = W W^dagger (up to dropped eigenvalues).
    const ComplexMatrix &weighted_eigenvectors() const noexcept { return weighted_eigenvectors_; }

  private:
    MixedState(DensityMatrix rho, ComplexMatrix w) : rho_(std::move(rho)), weighted_eigenvectors_(std::move(w)) {}

    DensityMatrix rho_;
    ComplexMatrix weighted_eigenvectors_;
};

struct Decomposition {
    std::vector<double> weights;
    /// Zero-weight members hold |0000> as a placeholder.
    std::vector<PureState> states;
    ComplexMatrix mixing_isometry;
};

/// Throws InvalidArgument unless `isometry` is m x rank with orthonormal columns.
Decomposition decomposition_from_isometry(const MixedState &rho, const ComplexMatrix &isometry);

/// sum_i w_i |psi_i><psi_i|
ComplexMatrix reconstruct(const Decomposition &d);

/// sum_i w_i F4(psi_i)
double average_f4(const Decomposition &d, const SolverOptions &options = {});

int default_ensemble_size(int rank);

struct ConvexRoofOptions {
    /// 0 selects default_ensemble_size(rank).
    int ensemble_size = 0;
    /// Row-pair rotations per start.
    int budget = 200;
    int starts = 4;
    std::uint64_t seed = 0;
    SolverOptions solver;
};

struct ConvexRoofResult {
    /// Upper bound on F4(rho): the best average found.
    double value = 0.0;
    Decomposition best;
    std::vector<double> start_values;
    /// max - min over start_values.
    double spread = 0.0;
    long evaluations = 0;
};

/// Start 0 is the eigendecomposition; the others draw Haar-random
/// isometries. Deterministic in (rho, options); doubling the budget never
/// raises the value.
ConvexRoofResult convex_roof_f4(const MixedState &rho, const ConvexRoofOptions &options = {});

}  // namespace tetrafill
