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

#include "measures.hpp"

#include <gtest/gtest.h>

#include "errors.hpp"
#include "oracles.hpp"

using namespace tetrafill;

TEST(measures, ghz4_values) {
    const MeasureReport r = measure(named_state(NamedState::GHZ4));
    EXPECT_NEAR(r.f4, 1.0, 1e-12);
    EXPECT_NEAR(r.gmc, 2.0 / 3.0, 1e-12);
    // Four entries 1 and three 2/3.
    EXPECT_NEAR(r.gbc, std::pow(2.0 / 3.0, 3.0 / 7.0), 1e-12);
    EXPECT_NEAR(r.gbc, 0.8405, 5e-5);
    EXPECT_EQ(r.degeneracy, DegeneracyClass::Generic);
}

TEST(measures, cluster_values) {
    // sigma = (3/8, 5/16 x4, 3/8) gives F4 = 3^{9/4} / 12.
    const MeasureReport r = measure(named_state(NamedState::Cluster4));
    EXPECT_NEAR(r.f4, std::pow(3.0, 2.25) / 12.0, 1e-12);
    EXPECT_NEAR(r.f4, 0.9871, 5e-5);
    EXPECT_NEAR(r.gmc, 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(r.gbc, std::pow(2.0 / 3.0, 1.0 / 7.0), 1e-12);
    EXPECT_NEAR(r.gbc, 0.9437, 5e-5);
}

TEST(measures, prefactor_normalizes_regular_tetrahedron) {
    std::array<double, 6> sigma;
    sigma.fill(1.0 / 3.0);
    EXPECT_NEAR(kF4Prefactor * volume(sigma).V, 1.0, 1e-14);
}

TEST(measures, product_is_zero) {
    const MeasureReport r = measure(named_state(NamedState::Product4));
    EXPECT_EQ(r.f4, 0.0);
    EXPECT_EQ(r.gmc, 0.0);
    EXPECT_EQ(r.gbc, 0.0);
    EXPECT_EQ(r.degeneracy, DegeneracyClass::ProductDot);
}

TEST(measures, biseparable_states_vanish) {
    for (NamedState s : {NamedState::BisepOneToOther, NamedState::BisepTwoToTwo, NamedState::BisepOneOneTwo}) {
        const MeasureReport r = measure(named_state(s));
        EXPECT_EQ(r.f4, 0.0) << to_string(s);
        EXPECT_EQ(r.gmc, 0.0) << to_string(s);
        EXPECT_EQ(r.gbc, 0.0) << to_string(s);
    }
    for (int seed = 0; seed < 30; ++seed) {
        const PureState s = random_partitioned_state(4, {{1, 4}, {2, 3}}, seed);
        EXPECT_EQ(concurrence_fill_4(s), 0.0);
    }
}

TEST(measures, quadrilateral_stays_positive_when_biseparable) {
    // Brahmagupta with sides (0, 1, 1, 1): s = 3/2, area sqrt(3/16).
    const MeasureReport r = measure(named_state(NamedState::BisepOneToOther));
    EXPECT_NEAR(r.cyclic_quad_area, std::sqrt(3.0) / 4.0, 1e-12);
    EXPECT_EQ(r.f4, 0.0);
    EXPECT_NEAR(measure(named_state(NamedState::GHZ4)).cyclic_quad_area, 1.0, 1e-12);
}

TEST(measures, three_qubit_fill) {
    EXPECT_NEAR(concurrence_fill_3(named_state(NamedState::GHZ3)), 1.0, 1e-12);
    EXPECT_NEAR(concurrence_fill_3(named_state(NamedState::W3)), 64.0 / 81.0, 1e-12);
    for (int i = 0; i < 50; ++i) {
        const PureState s = haar_random_state(3, derive_seed(4, i));
        const auto c = one_to_other_3(s);
        EXPECT_NEAR(concurrence_fill_3(s), 4.0 / std::sqrt(3.0) * oracle::heron(c[0], c[1], c[2]), 1e-12);
    }
    EXPECT_THROW(concurrence_fill_3(named_state(NamedState::GHZ4)), Error);
}

TEST(measures, haar_values_in_unit_interval) {
    for (int i = 0; i < 300; ++i) {
        const MeasureReport r = measure(haar_random_state(4, derive_seed(8, i)));
        EXPECT_GT(r.f4, 0.0);
        EXPECT_LE(r.f4, 1.0);
        EXPECT_GE(r.gbc, r.gmc);
        EXPECT_LE(r.gbc, 1.0);
    }
}

TEST(measures, gmc_and_gbc_on_profiles) {
    ConcurrenceProfile p;
    p.one_to_other = {0.5, 0.6, 0.7, 0.8};
    p.two_to_other = {0.9, 0.4, 0.3};
    EXPECT_NEAR(gmc(p), 0.3, 1e-15);
    EXPECT_NEAR(gbc(p), std::pow(0.5 * 0.6 * 0.7 * 0.8 * 0.9 * 0.4 * 0.3, 1.0 / 7.0), 1e-14);
    p.two_to_other[2] = 1e-12;
    EXPECT_EQ(gbc(p), 0.0);
}

TEST(measures, invariant_under_permutation_and_local_unitaries) {
    const PureState s = haar_random_state(4, 17);
    const MeasureReport base = measure(s);
    const std::array<int, 4> perm = {3, 1, 4, 2};
    const MeasureReport permuted = measure(permute_qubits(s, perm));
    EXPECT_NEAR(permuted.f4, base.f4, 1e-12);
    EXPECT_NEAR(permuted.gbc, base.gbc, 1e-12);
    const Eigen::Matrix2cd u = haar_random_unitary(2, 5);
    const MeasureReport rotated = measure(apply_local_unitary(s, 3, u));
    EXPECT_NEAR(rotated.f4, base.f4, 1e-12);
    EXPECT_NEAR(rotated.gmc, base.gmc, 1e-12);
}

TEST(measures, f4_independent_of_cut_normalization) {
    const PureState s = haar_random_state(4, 23);
    const double f4 = concurrence_fill_4(s);
    for (double factor : {0.5, 1.5, 3.0}) {
        const ConcurrenceProfile p = concurrence_profile(s, factor * kTwoToOtherNormalization);
        EXPECT_NEAR(tetra_report(p).f4, f4, 1e-10);
    }
}
