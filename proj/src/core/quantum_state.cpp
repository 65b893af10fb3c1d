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

#include "quantum_state.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <random>

#include "errors.hpp"

namespace tetrafill {

namespace {

int bit_of(Eigen::Index index, int qubit, int n_qubits) {
    return static_cast<int>((index >> (n_qubits - qubit)) & 1);
}

void check_qubit_count(int n_qubits) {
    if (n_qubits != 3 && n_qubits != 4) {
        throw Error(ErrorCode::DimensionMismatch, "pure states must have 3 or 4 qubits, got " + std::to_string(n_qubits));
    }
}

StateVector haar_vector(Eigen::Index dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v[i] = Complex(re, im);
    }
    return v / v.norm();
}

std::string normalize_name(std::string_view name) {
    std::string out;
    for (char c : name) {
        if (c == '-' || c == '_' || c == ' ') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

constexpr std::array<NamedState, 9> kNamedStates = {
    NamedState::GHZ4,   NamedState::Cluster4,        NamedState::W4,
    NamedState::GHZ3,   NamedState::W3,              NamedState::Product4,
    NamedState::BisepOneToOther, NamedState::BisepTwoToTwo, NamedState::BisepOneOneTwo,
};

}  // namespace

PureState PureState::from_vector(int n_qubits, StateVector amplitudes) {
    check_qubit_count(n_qubits);
    if (amplitudes.size() != (Eigen::Index{1} << n_qubits)) {
        throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(1 << n_qubits) + " amplitudes, got " +
                                                      std::to_string(amplitudes.size()));
    }
    const double norm = amplitudes.norm();
    if (!std::isfinite(norm)) throw Error(ErrorCode::InvalidArgument, "amplitudes must be finite");
    if (norm < kMinNorm) throw Error(ErrorCode::ZeroVector, "cannot normalize a zero vector");
    amplitudes /= norm;
    return PureState(n_qubits, std::move(amplitudes));
}

PureState PureState::from_amplitudes(int n_qubits, std::span<const Complex> amplitudes) {
    StateVector v(static_cast<Eigen::Index>(amplitudes.size()));
    std::copy(amplitudes.begin(), amplitudes.end(), v.data());
    return from_vector(n_qubits, std::move(v));
}

PureState make_state(int n_qubits, std::span<const Complex> amplitudes) {
    return PureState::from_amplitudes(n_qubits, amplitudes);
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix rho, double tol) {
    if (rho.rows() != rho.cols() || rho.rows() == 0) {
        throw Error(ErrorCode::DimensionMismatch, "density matrix must be square and nonempty");
    }
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) {
        throw Error(ErrorCode::InvalidArgument, "density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex(1.0)) > tol) {
        throw Error(ErrorCode::InvalidArgument, "density matrix trace is not 1");
    }
    const ComplexMatrix herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(herm, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -tol) {
        throw Error(ErrorCode::InvalidArgument, "density matrix has a negative eigenvalue");
    }
    return DensityMatrix(herm);
}

DensityMatrix DensityMatrix::from_pure(const StateVector &psi) {
    const double norm = psi.norm();
    if (norm < kMinNorm) throw Error(ErrorCode::ZeroVector, "cannot build a density matrix from a zero vector");
    const StateVector unit = psi / norm;
    return DensityMatrix(unit * unit.adjoint());
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    return rho_.squaredNorm();
}

Bipartition Bipartition::make(int n_qubits, std::vector<int> left) {
    if (n_qubits < 2 || n_qubits > 4) {
        throw Error(ErrorCode::InvalidArgument, "bipartitions are defined for 2 to 4 qubits");
    }
    std::sort(left.begin(), left.end());
    if (left.empty()) throw Error(ErrorCode::InvalidArgument, "bipartition side must be nonempty");
    if (std::adjacent_find(left.begin(), left.end()) != left.end()) {
        throw Error(ErrorCode::InvalidArgument, "bipartition has a repeated qubit");
    }
    if (left.front() < 1 || left.back() > n_qubits) {
        throw Error(ErrorCode::InvalidArgument, "qubit index out of range in bipartition");
    }
    if (static_cast<int>(left.size()) == n_qubits) {
        throw Error(ErrorCode::InvalidArgument, "bipartition complement must be nonempty");
    }
    std::vector<int> right;
    for (int q = 1; q <= n_qubits; ++q) {
        if (!std::binary_search(left.begin(), left.end(), q)) right.push_back(q);
    }
    return Bipartition(n_qubits, std::move(left), std::move(right));
}

CutKind Bipartition::kind() const noexcept {
    if (n_qubits_ == 2) return CutKind::Pairwise;
    if (left_.size() == 1 || right_.size() == 1) return CutKind::OneToOther;
    return CutKind::TwoToOther;
}

Bipartition Bipartition::flipped() const { return Bipartition(n_qubits_, right_, left_); }

std::span<const NamedState> all_named_states() { return kNamedStates; }

std::string_view to_string(NamedState s) {
    switch (s) {
        case NamedState::GHZ4: return "GHZ4";
        case NamedState::Cluster4: return "Cluster4";
        case NamedState::W4: return "W4";
        case NamedState::GHZ3: return "GHZ3";
        case NamedState::W3: return "W3";
        case NamedState::Product4: return "Product4";
        case NamedState::BisepOneToOther: return "BisepOneToOther";
        case NamedState::BisepTwoToTwo: return "BisepTwoToTwo";
        case NamedState::BisepOneOneTwo: return "BisepOneOneTwo";
    }
    return "?";
}

NamedState parse_named_state(std::string_view name) {
    const std::string key = normalize_name(name);
    for (NamedState s : kNamedStates) {
        if (normalize_name(to_string(s)) == key) return s;
    }
    if (key == "product" || key == "product0000") return NamedState::Product4;
    if (key == "phi4" || key == "cluster") return NamedState::Cluster4;
    throw Error(ErrorCode::InvalidArgument, "unknown named state '" + std::string(name) + "'");
}

PureState named_state(NamedState s) {
    auto basis = [](int n, std::initializer_list<std::pair<int, Complex>> entries) {
        StateVector v = StateVector::Zero(Eigen::Index{1} << n);
        for (const auto &[index, amp] : entries) v[index] = amp;
        return PureState::from_vector(n, std::move(v));
    };
    const double h = 1.0 / std::sqrt(2.0);
    switch (s) {
        case NamedState::GHZ4: return basis(4, {{0, h}, {15, h}});
        case NamedState::Cluster4: return basis(4, {{0, 0.5}, {3, 0.5}, {12, 0.5}, {15, -0.5}});
        case NamedState::W4: return basis(4, {{1, 0.5}, {2, 0.5}, {4, 0.5}, {8, 0.5}});
        case NamedState::GHZ3: return basis(3, {{0, h}, {7, h}});
        case NamedState::W3: {
            const double t = 1.0 / std::sqrt(3.0);
            return basis(3, {{1, t}, {2, t}, {4, t}});
        }
        case NamedState::Product4: return basis(4, {{0, 1.0}});
        // |0> (x) (|000> + |111>)/sqrt2
        case NamedState::BisepOneToOther: return basis(4, {{0, h}, {7, h}});
        // (|00> + |11>)(|00> + |11>)/2
        case NamedState::BisepTwoToTwo: return basis(4, {{0, 0.5}, {3, 0.5}, {12, 0.5}, {15, 0.5}});
        // |00> (|00> + |11>)/sqrt2
        case NamedState::BisepOneOneTwo: return basis(4, {{0, h}, {3, h}});
    }
    throw Error(ErrorCode::InvalidArgument, "unknown named state");
}

DensityMatrix reduced_density(const PureState &state, std::span<const int> keep) {
    const int n = state.n_qubits();
    std::vector<int> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (kept.empty() || static_cast<int>(kept.size()) >= n) {
        throw Error(ErrorCode::InvalidArgument, "keep set must be a nonempty strict subset of the qubits");
    }
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end() || kept.front() < 1 || kept.back() > n) {
        throw Error(ErrorCode::InvalidArgument, "keep set has repeated or out-of-range qubits");
    }
    std::vector<int> traced;
    for (int q = 1; q <= n; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
    }

    // Reshape psi into M[kept index, traced index]; then rho = M M^dagger.
    const Eigen::Index dk = Eigen::Index{1} << kept.size();
    const Eigen::Index dt = Eigen::Index{1} << traced.size();
    ComplexMatrix m(dk, dt);
    for (Eigen::Index b = 0; b < state.dim(); ++b) {
        Eigen::Index row = 0;
        for (int q : kept) row = (row << 1) | bit_of(b, q, n);
        Eigen::Index col = 0;
        for (int q : traced) col = (col << 1) | bit_of(b, q, n);
        m(row, col) = state[b];
    }
    ComplexMatrix rho = m * m.adjoint();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix(std::move(rho));
}

PureState haar_random_state(int n_qubits, std::uint64_t seed) {
    if (n_qubits != 3 && n_qubits != 4) {
        throw Error(ErrorCode::Unsupported, "Haar sampling supports 3 or 4 qubits");
    }
    std::mt19937_64 rng(seed);
    return PureState::from_vector(n_qubits, haar_vector(Eigen::Index{1} << n_qubits, rng));
}

PureState random_partitioned_state(int n_qubits, const std::vector<std::vector<int>> &blocks, std::uint64_t seed) {
    check_qubit_count(n_qubits);
    std::vector<int> seen;
    for (const auto &block : blocks) {
        if (block.empty()) throw Error(ErrorCode::InvalidArgument, "empty block in partition");
        seen.insert(seen.end(), block.begin(), block.end());
    }
    std::sort(seen.begin(), seen.end());
    for (int q = 1; q <= n_qubits; ++q) {
        if (static_cast<int>(seen.size()) != n_qubits || seen[q - 1] != q) {
            throw Error(ErrorCode::InvalidArgument, "blocks must partition the qubits");
        }
    }

    std::mt19937_64 rng(seed);
    std::vector<StateVector> factors;
    for (const auto &block : blocks) factors.push_back(haar_vector(Eigen::Index{1} << block.size(), rng));

    StateVector psi(Eigen::Index{1} << n_qubits);
    for (Eigen::Index b = 0; b < psi.size(); ++b) {
        Complex amp(1.0);
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            Eigen::Index local = 0;
            for (int q : blocks[k]) local = (local << 1) | bit_of(b, q, n_qubits);
            amp *= factors[k][local];
        }
        psi[b] = amp;
    }
    return PureState::from_vector(n_qubits, std::move(psi));
}

PureState random_biseparable_state(const Bipartition &partition, std::uint64_t seed) {
    if (partition.n_qubits() != 4) {
        throw Error(ErrorCode::InvalidArgument, "biseparable sampling is defined for 4-qubit partitions");
    }
    return random_partitioned_state(4, {partition.left(), partition.right()}, seed);
}

PureState apply_local_unitary(const PureState &state, int qubit, const Eigen::Matrix2cd &u) {
    const int n = state.n_qubits();
    if (qubit < 1 || qubit > n) throw Error(ErrorCode::InvalidArgument, "qubit index out of range");
    if ((u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-10) {
        throw Error(ErrorCode::NotUnitary, "local operator is not unitary");
    }
    const Eigen::Index stride = Eigen::Index{1} << (n - qubit);
    StateVector out = state.amplitudes();
    for (Eigen::Index b = 0; b < state.dim(); ++b) {
        if (b & stride) continue;
        const Complex a0 = state[b];
        const Complex a1 = state[b | stride];
        out[b] = u(0, 0) * a0 + u(0, 1) * a1;
        out[b | stride] = u(1, 0) * a0 + u(1, 1) * a1;
    }
    return PureState::from_vector(n, std::move(out));
}

PureState permute_qubits(const PureState &state, std::span<const int> perm) {
    const int n = state.n_qubits();
    std::vector<int> sorted(perm.begin(), perm.end());
    std::sort(sorted.begin(), sorted.end());
    for (int q = 1; q <= n; ++q) {
        if (static_cast<int>(sorted.size()) != n || sorted[q - 1] != q) {
            throw Error(ErrorCode::InvalidArgument, "not a permutation of the qubits");
        }
    }
    StateVector out(state.dim());
    for (Eigen::Index b = 0; b < state.dim(); ++b) {
        Eigen::Index source = 0;
        for (int k = 1; k <= n; ++k) {
            if (bit_of(b, k, n)) source |= Eigen::Index{1} << (n - perm[k - 1]);
        }
        out[b] = state[source];
    }
    return PureState::from_vector(n, std::move(out));
}

ComplexMatrix haar_random_unitary(int dim, std::uint64_t seed) {
    if (dim < 1) throw Error(ErrorCode::InvalidArgument, "unitary dimension must be positive");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix z(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z(i, j) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phases of R's diagonal so Q is Haar rather than QR-biased.
    for (int j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace tetrafill
