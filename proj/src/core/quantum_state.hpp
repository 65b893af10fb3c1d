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

// Pure states and density matrices of three and four qubits.
//
// Basis convention: amplitude index b encodes |q1 q2 ... qn> with q1 the most
// significant bit, so |0011> is index 3 and |1100> is index 12. Qubits are
// numbered from 1 everywhere in the public interface.

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace tetrafill {

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Norms below this are rejected as zero vectors instead of normalized.
inline constexpr double kMinNorm = 1e-12;

class PureState {
  public:
    /// Normalizes the amplitudes. Throws DimensionMismatch when the length is
    /// not 2^n_qubits (n_qubits must be 3 or 4) and ZeroVector when the norm
    /// is below kMinNorm.
    static PureState from_amplitudes(int n_qubits, std::span<const Complex> amplitudes);
    static PureState from_vector(int n_qubits, StateVector amplitudes);

    int n_qubits() const noexcept { return n_qubits_; }
    Eigen::Index dim() const noexcept { return amplitudes_.size(); }
    const StateVector &amplitudes() const noexcept { return amplitudes_; }
    Complex operator[](Eigen::Index i) const { return amplitudes_[i]; }

  private:
    PureState(int n_qubits, StateVector amplitudes) : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

    int n_qubits_;
    StateVector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
  public:
    /// Validates the invariants to within `tol` (entrywise Hermiticity, trace,
    /// smallest eigenvalue) and throws InvalidArgument otherwise.
    static DensityMatrix from_matrix(ComplexMatrix rho, double tol = 1e-10);
    static DensityMatrix from_pure(const StateVector &psi);

    Eigen::Index dim() const noexcept { return rho_.rows(); }
    const ComplexMatrix &matrix() const noexcept { return rho_; }
    double purity() const;

  private:
    friend DensityMatrix reduced_density(const PureState &, std::span<const int>);
    explicit DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {}

    ComplexMatrix rho_;
};

enum class CutKind { OneToOther, TwoToOther, Pairwise };

/// A split of qubits {1..n} into two nonempty complementary sets.
class Bipartition {
  public:
    static Bipartition make(int n_qubits, std::vector<int> left);

    int n_qubits() const noexcept { return n_qubits_; }
    const std::vector<int> &left() const noexcept { return left_; }
    const std::vector<int> &right() const noexcept { return right_; }
    CutKind kind() const noexcept;
    Bipartition flipped() const;

  private:
    Bipartition(int n, std::vector<int> left, std::vector<int> right)
        : n_qubits_(n), left_(std::move(left)), right_(std::move(right)) {}

    int n_qubits_;
    std::vector<int> left_;
    std::vector<int> right_;
};

enum class NamedState {
    GHZ4,
    Cluster4,
    W4,
    GHZ3,
    W3,
    Product4,
    BisepOneToOther,  // |0> (x) GHZ3
    BisepTwoToTwo,    // Bell(12) (x) Bell(34)
    BisepOneOneTwo,   // |0>|0> (x) Bell(34)
};

std::span<const NamedState> all_named_states();
std::string_view to_string(NamedState s);
/// Accepts the enum spelling ("Cluster4") or the CLI spelling ("cluster4",
/// "bisep-one-to-other"), case-insensitively.
NamedState parse_named_state(std::string_view name);
PureState named_state(NamedState s);

PureState make_state(int n_qubits, std::span<const Complex> amplitudes);

/// Partial trace onto `keep` (1-based, any order; the kept qubits are
/// ordered ascending in the result with the lowest index most significant).
DensityMatrix reduced_density(const PureState &state, std::span<const int> keep);

PureState haar_random_state(int n_qubits, std::uint64_t seed);

/// Tensor product of independent Haar-random states on each block. `blocks`
/// must partition {1..n_qubits}; a singleton block is a random qubit state.
PureState random_partitioned_state(int n_qubits, const std::vector<std::vector<int>> &blocks, std::uint64_t seed);

/// Four-qubit state that factors across `partition`.
PureState random_biseparable_state(const Bipartition &partition, std::uint64_t seed);

PureState apply_local_unitary(const PureState &state, int qubit, const Eigen::Matrix2cd &u);

/// Relabels qubits: qubit k of the result is qubit perm[k-1] of `state`.
PureState permute_qubits(const PureState &state, std::span<const int> perm);

/// Haar-distributed unitary of the given dimension.
ComplexMatrix haar_random_unitary(int dim, std::uint64_t seed);

/// Independent per-sample seed stream (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace tetrafill
