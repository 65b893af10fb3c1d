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

#include <gtest/gtest.h>

#include "errors.hpp"
#include "oracles.hpp"

using namespace tetrafill;

namespace {

ErrorCode code_of(auto &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::Unsupported;
}

}  // namespace

TEST(quantum_state, normalizes_amplitudes) {
    std::vector<Complex> amps(16, 0.0);
    amps[0] = 3.0;
    amps[15] = Complex(0, 4.0);
    const PureState s = make_state(4, amps);
    EXPECT_NEAR(s.amplitudes().norm(), 1.0, 1e-15);
    EXPECT_NEAR(s[0].real(), 0.6, 1e-15);
    EXPECT_NEAR(s[15].imag(), 0.8, 1e-15);
}

TEST(quantum_state, rejects_bad_input) {
    std::vector<Complex> eight(8, 1.0);
    EXPECT_EQ(code_of([&] { make_state(4, eight); }), ErrorCode::DimensionMismatch);
    std::vector<Complex> zeros(16, 0.0);
    EXPECT_EQ(code_of([&] { make_state(4, zeros); }), ErrorCode::ZeroVector);
    std::vector<Complex> four(4, 1.0);
    EXPECT_EQ(code_of([&] { make_state(2, four); }), ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of([] { haar_random_state(5, 1); }), ErrorCode::Unsupported);
}

TEST(quantum_state, big_endian_convention) {
    const PureState c = named_state(NamedState::Cluster4);
    EXPECT_NEAR(c[0b0011].real(), 0.5, 1e-15);
    EXPECT_NEAR(c[0b1100].real(), 0.5, 1e-15);
    EXPECT_NEAR(c[0b1111].real(), -0.5, 1e-15);

    // Flipping qubit 1 moves |0000> to |1000> = index 8.
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    const PureState flipped = apply_local_unitary(named_state(NamedState::Product4), 1, x);
    EXPECT_NEAR(std::abs(flipped[8]), 1.0, 1e-15);
}

TEST(quantum_state, named_states_parse_and_normalize) {
    for (NamedState s : all_named_states()) {
        EXPECT_EQ(parse_named_state(to_string(s)), s);
        EXPECT_NEAR(named_state(s).amplitudes().norm(), 1.0, 1e-15);
    }
    EXPECT_EQ(parse_named_state("ghz4"), NamedState::GHZ4);
    EXPECT_EQ(parse_named_state("bisep-one-to-other"), NamedState::BisepOneToOther);
    EXPECT_EQ(parse_named_state("phi4"), NamedState::Cluster4);
    EXPECT_EQ(code_of([] { parse_named_state("bell"); }), ErrorCode::InvalidArgument);
}

TEST(quantum_state, reduced_density_matches_index_loop) {
    oracle::HaarSampler sampler(7);
    const std::vector<std::vector<int>> keeps = {{1}, {2}, {4}, {1, 2}, {1, 3}, {2, 4}, {1, 2, 3}};
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::VectorXcd psi = sampler(4);
        const PureState s = PureState::from_vector(4, psi);
        for (const auto &keep : keeps) {
            const Eigen::MatrixXcd expected = oracle::partial_trace(psi, 4, keep);
            const DensityMatrix rho = reduced_density(s, keep);
            EXPECT_LT((rho.matrix() - expected).cwiseAbs().maxCoeff(), 1e-13);
            EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-13);
        }
    }
}

TEST(quantum_state, density_validation) {
    ComplexMatrix rho = ComplexMatrix::Identity(4, 4) / 4.0;
    EXPECT_NO_THROW(DensityMatrix::from_matrix(rho));
    EXPECT_NEAR(DensityMatrix::from_matrix(rho).purity(), 0.25, 1e-15);
    ComplexMatrix not_hermitian = rho;
    not_hermitian(0, 1) = 0.1;
    EXPECT_EQ(code_of([&] { DensityMatrix::from_matrix(not_hermitian); }), ErrorCode::InvalidArgument);
    ComplexMatrix bad_trace = rho * 2.0;
    EXPECT_EQ(code_of([&] { DensityMatrix::from_matrix(bad_trace); }), ErrorCode::InvalidArgument);
    ComplexMatrix negative = rho;
    negative(0, 0) = -0.25;
    negative(1, 1) = 0.75;
    EXPECT_EQ(code_of([&] { DensityMatrix::from_matrix(negative); }), ErrorCode::InvalidArgument);
}

TEST(quantum_state, bipartition_kinds) {
    EXPECT_EQ(Bipartition::make(4, {2}).kind(), CutKind::OneToOther);
    EXPECT_EQ(Bipartition::make(4, {1, 3}).kind(), CutKind::TwoToOther);
    EXPECT_EQ(Bipartition::make(4, {1, 2, 4}).kind(), CutKind::OneToOther);
    EXPECT_EQ(Bipartition::make(2, {1}).kind(), CutKind::Pairwise);
    const Bipartition b = Bipartition::make(4, {3, 1});
    EXPECT_EQ(b.left(), (std::vector<int>{1, 3}));
    EXPECT_EQ(b.right(), (std::vector<int>{2, 4}));
    EXPECT_EQ(b.flipped().left(), (std::vector<int>{2, 4}));
    EXPECT_THROW(Bipartition::make(4, {}), Error);
    EXPECT_THROW(Bipartition::make(4, {1, 2, 3, 4}), Error);
    EXPECT_THROW(Bipartition::make(4, {5}), Error);
    EXPECT_THROW(Bipartition::make(4, {2, 2}), Error);
}

TEST(quantum_state, haar_is_deterministic_and_seeded) {
    const PureState a = haar_random_state(4, 42);
    const PureState b = haar_random_state(4, 42);
    const PureState c = haar_random_state(4, 43);
    EXPECT_EQ((a.amplitudes() - b.amplitudes()).norm(), 0.0);
    EXPECT_GT((a.amplitudes() - c.amplitudes()).norm(), 1e-3);
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(quantum_state, haar_mean_purity_matches_theory) {
    // Single-qubit and two-qubit marginals of 4-qubit Haar states. The
    // standard deviation of the single-qubit purity is below 0.1, so 4000
    // samples pin the mean to about 5e-3.
    constexpr int kSamples = 4000;
    double one = 0.0;
    double two = 0.0;
    double oracle_one = 0.0;
    oracle::HaarSampler sampler(99);
    const std::vector<int> q1 = {1};
    const std::vector<int> q12 = {1, 2};
    for (int i = 0; i < kSamples; ++i) {
        const PureState s = haar_random_state(4, derive_seed(5, i));
        one += reduced_density(s, q1).purity();
        two += reduced_density(s, q12).purity();
        oracle_one += oracle::purity(oracle::partial_trace(sampler(4), 4, q1));
    }
    EXPECT_NEAR(one / kSamples, oracle::haar_mean_purity(2, 8), 5e-3);
    EXPECT_NEAR(two / kSamples, oracle::haar_mean_purity(4, 4), 5e-3);
    EXPECT_NEAR(oracle_one / kSamples, oracle::haar_mean_purity(2, 8), 5e-3);
}

TEST(quantum_state, haar_unitary_is_unitary) {
    for (int dim : {2, 4, 9}) {
        const ComplexMatrix u = haar_random_unitary(dim, 3);
        EXPECT_LT((u.adjoint() * u - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-13);
    }
}

TEST(quantum_state, biseparable_states_factor) {
    for (int seed = 0; seed < 10; ++seed) {
        const Bipartition cut = Bipartition::make(4, {1, 3});
        const PureState s = random_biseparable_state(cut, seed);
        EXPECT_NEAR(reduced_density(s, cut.left()).purity(), 1.0, 1e-12);
        EXPECT_LT(reduced_density(s, std::vector<int>{1}).purity(), 1.0 - 1e-6);

        const PureState blocks = random_partitioned_state(4, {{2}, {1, 4}, {3}}, seed);
        EXPECT_NEAR(reduced_density(blocks, std::vector<int>{2}).purity(), 1.0, 1e-12);
        EXPECT_NEAR(reduced_density(blocks, std::vector<int>{1, 4}).purity(), 1.0, 1e-12);
    }
    EXPECT_THROW(random_partitioned_state(4, {{1, 2}, {2, 3, 4}}, 0), Error);
}

TEST(quantum_state, local_unitary_validation) {
    Eigen::Matrix2cd not_unitary;
    not_unitary << 1, 1, 0, 1;
    const PureState s = named_state(NamedState::GHZ4);
    EXPECT_EQ(code_of([&] { apply_local_unitary(s, 1, not_unitary); }), ErrorCode::NotUnitary);
    EXPECT_THROW(apply_local_unitary(s, 5, Eigen::Matrix2cd::Identity()), Error);
}

TEST(quantum_state, permutation_relabels_qubits) {
    // |0001> with qubit 4 moved to position 1 becomes |1000>.
    std::vector<Complex> amps(16, 0.0);
    amps[1] = 1.0;
    const PureState s = make_state(4, amps);
    const std::array<int, 4> perm = {4, 1, 2, 3};
    EXPECT_NEAR(std::abs(permute_qubits(s, perm)[8]), 1.0, 1e-15);
    const std::array<int, 4> bad = {1, 1, 2, 3};
    EXPECT_THROW(permute_qubits(s, bad), Error);
}
