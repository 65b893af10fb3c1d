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

#include "tetra_solver.hpp"

#include <random>

#include <gtest/gtest.h>

#include "errors.hpp"
#include "oracles.hpp"

using namespace tetrafill;

namespace {

ConcurrenceProfile profile_of(NamedState s) { return concurrence_profile(named_state(s)); }

// A random tetrahedron turned into a profile: faces from the geometry, cuts
// from the brackets divided by `lambda`. Empty if a bracket is not positive.
std::optional<std::pair<ConcurrenceProfile, oracle::Tetra>> tetra_profile(std::mt19937_64 &rng, double lambda) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::array<Eigen::Vector3d, 4> v;
    for (auto &p : v) p = Eigen::Vector3d(u(rng), u(rng), u(rng));
    oracle::Tetra t = oracle::analyze(v);
    if (t.volume < 1e-2) return std::nullopt;
    const auto brackets = oracle::cut_brackets(t.sigma);
    ConcurrenceProfile p;
    p.one_to_other = t.face_areas;
    for (int k = 0; k < 3; ++k) {
        if (brackets[k] <= 1e-6) return std::nullopt;
        p.two_to_other[k] = brackets[k] / lambda;
    }
    return std::make_pair(p, t);
}

}  // namespace

TEST(tetra_solver, ghz4_closed_form) {
    const SigmaSolution s = solve_sigma(profile_of(NamedState::GHZ4));
    EXPECT_TRUE(s.converged);
    EXPECT_FALSE(s.degenerate);
    for (double v : s.sigma) EXPECT_NEAR(v, 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(s.lambda, 0.5, 1e-12);
    EXPECT_LT(s.residual, 1e-12);
}

TEST(tetra_solver, cluster_closed_form) {
    // By symmetry sigma_12 = sigma_34 = a and the rest b with 2b + a = 1,
    // -a + 2b = 2/3 lambda and a = lambda; so a = 3/8, b = 5/16.
    const SigmaSolution s = solve_sigma(profile_of(NamedState::Cluster4));
    EXPECT_NEAR(s.sigma[pair_index(1, 2)], 3.0 / 8.0, 1e-12);
    EXPECT_NEAR(s.sigma[pair_index(3, 4)], 3.0 / 8.0, 1e-12);
    for (auto [i, j] : {std::pair{1, 3}, {1, 4}, {2, 3}, {2, 4}}) {
        EXPECT_NEAR(s.sigma[pair_index(i, j)], 5.0 / 16.0, 1e-12);
    }
    EXPECT_NEAR(s.lambda, 3.0 / 8.0, 1e-12);
}

TEST(tetra_solver, recovers_random_tetrahedra) {
    std::mt19937_64 rng(2024);
    int checked = 0;
    while (checked < 50) {
        const double lambda = 0.3 + 0.1 * (checked % 7);
        const auto sample = tetra_profile(rng, lambda);
        if (!sample) continue;
        const auto &[profile, tetra] = *sample;
        const SigmaSolution s = solve_sigma(profile);
        for (int p = 0; p < 6; ++p) EXPECT_NEAR(s.sigma[p], tetra.sigma[p], 1e-9 * (1.0 + tetra.sigma[p]));
        EXPECT_NEAR(s.lambda, lambda, 1e-9);
        EXPECT_NEAR(volume(s).V, tetra.volume, 1e-9 * tetra.volume);
        ++checked;
    }
}

TEST(tetra_solver, regular_volume) {
    // Unit-area faces: edge a with a^2 sqrt(3)/4 = 1, volume a^3 / (6 sqrt 2).
    const double a = std::sqrt(4.0 / std::sqrt(3.0));
    std::array<double, 6> sigma;
    sigma.fill(1.0 / 3.0);
    const VolumeBreakdown v = volume(sigma);
    EXPECT_NEAR(v.V, a * a * a / (6.0 * std::sqrt(2.0)), 1e-14);
    EXPECT_NEAR(v.S, 4.0, 1e-14);  // total surface
}

TEST(tetra_solver, volume_rejects_invalid_sigma) {
    EXPECT_THROW(volume(std::array<double, 6>{1, 1, 1, 1, 1, -0.1}), Error);
    // One huge split area cannot close into a tetrahedron.
    try {
        volume(std::array<double, 6>{100, 0.01, 0.01, 0.01, 0.01, 0.01});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
    }
}

TEST(tetra_solver, infeasible_profile) {
    ConcurrenceProfile p;
    p.one_to_other = {1.0, 0.1, 0.1, 0.1};
    p.two_to_other = {0.5, 0.5, 0.5};
    try {
        solve_sigma(p);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InfeasibleProfile);
    }
    p.one_to_other = {0.5, 0.5, 0.5, 0.5};
    p.two_to_other = {-0.1, 0.5, 0.5};
    EXPECT_THROW(solve_sigma(p), Error);
}

TEST(tetra_solver, one_to_other_limit) {
    // |0> (x) GHZ3: face 1 vanishes, the others form a triangle of unit sides
    // split at their midpoints.
    const ConcurrenceProfile p = profile_of(NamedState::BisepOneToOther);
    const SigmaSolution s = solve_sigma(p);
    EXPECT_TRUE(s.degenerate);
    for (int j = 2; j <= 4; ++j) EXPECT_NEAR(s.sigma[pair_index(1, j)], 0.0, 1e-15);
    for (auto [i, j] : {std::pair{2, 3}, {2, 4}, {3, 4}}) EXPECT_NEAR(s.sigma[pair_index(i, j)], 0.5, 1e-12);
    EXPECT_EQ(volume(s).V, 0.0);
    EXPECT_EQ(classify_degeneracy(p, s), DegeneracyClass::OneToOtherBisep);

    // |00> (x) Bell: two live faces, sigma_34 carries both.
    const ConcurrenceProfile q = profile_of(NamedState::BisepOneOneTwo);
    const SigmaSolution t = solve_sigma(q);
    EXPECT_NEAR(t.sigma[pair_index(3, 4)], 1.0, 1e-12);
    EXPECT_EQ(classify_degeneracy(q, t), DegeneracyClass::OneToOtherBisep);
}

TEST(tetra_solver, two_to_other_biseparable) {
    const ConcurrenceProfile p = profile_of(NamedState::BisepTwoToTwo);
    const SigmaSolution s = solve_sigma(p);
    EXPECT_TRUE(s.degenerate);
    EXPECT_LT(s.residual, 1e-10);
    EXPECT_EQ(volume(s).V, 0.0);
    EXPECT_EQ(classify_degeneracy(p, s), DegeneracyClass::TwoToOtherBisep);

    for (int seed = 0; seed < 20; ++seed) {
        const auto cut = kTwoTwoCuts[seed % 3];
        const PureState state = random_biseparable_state(Bipartition::make(4, {cut[0], cut[1]}), seed);
        const ConcurrenceProfile rp = concurrence_profile(state);
        const SigmaSolution rs = solve_sigma(rp);
        EXPECT_EQ(volume(rs).V, 0.0);
        EXPECT_EQ(classify_degeneracy(rp, rs), DegeneracyClass::TwoToOtherBisep);
    }
}

TEST(tetra_solver, product_is_a_dot) {
    const ConcurrenceProfile p = profile_of(NamedState::Product4);
    const SigmaSolution s = solve_sigma(p);
    for (double v : s.sigma) EXPECT_EQ(v, 0.0);
    EXPECT_EQ(classify_degeneracy(p, s), DegeneracyClass::ProductDot);
    EXPECT_EQ(to_string(DegeneracyClass::ProductDot), "ProductDot");
    EXPECT_EQ(parse_degeneracy("Generic"), DegeneracyClass::Generic);
}

TEST(tetra_solver, haar_solutions_satisfy_the_system) {
    for (int i = 0; i < 200; ++i) {
        const ConcurrenceProfile p = concurrence_profile(haar_random_state(4, derive_seed(31, i)));
        const SigmaSolution s = solve_sigma(p);
        ASSERT_TRUE(s.converged);
        EXPECT_LT(equation_residual(p, s.sigma, s.lambda), 1e-11);
        for (double v : s.sigma) EXPECT_GT(v, 0.0);
        EXPECT_GT(s.lambda, 0.0);
        EXPECT_EQ(classify_degeneracy(p, s), DegeneracyClass::Generic);
    }
}

TEST(tetra_solver, normalization_is_absorbed_by_lambda) {
    const PureState state = haar_random_state(4, 12);
    const SigmaSolution base = solve_sigma(concurrence_profile(state));
    for (double factor : {0.5, 1.5, 3.0}) {
        const SigmaSolution s = solve_sigma(concurrence_profile(state, factor * kTwoToOtherNormalization));
        EXPECT_NEAR(s.lambda * factor, base.lambda, 1e-10);
        for (int p = 0; p < 6; ++p) EXPECT_NEAR(s.sigma[p], base.sigma[p], 1e-10);
    }
}

TEST(tetra_solver, uniqueness_over_restarts) {
    const ConcurrenceProfile p = concurrence_profile(haar_random_state(4, 4));
    const UniquenessReport r = verify_uniqueness(p, 10, 1);
    EXPECT_TRUE(r.all_converged_same);
    EXPECT_LT(r.max_spread, kUniquenessTol);
    EXPECT_GT(r.min_sigma, 0.0);
    EXPECT_EQ(r.solutions.size(), 10u);
}

TEST(tetra_solver, deterministic_given_seed) {
    const ConcurrenceProfile p = concurrence_profile(haar_random_state(4, 6));
    SolverOptions o;
    o.seed = 9;
    const SigmaSolution a = solve_sigma(p, o);
    const SigmaSolution b = solve_sigma(p, o);
    EXPECT_EQ(a.sigma, b.sigma);
    EXPECT_EQ(a.lambda, b.lambda);
}

TEST(tetra_solver, bad_start_does_not_converge_quietly) {
    const ConcurrenceProfile p = profile_of(NamedState::GHZ4);
    SolverOptions o;
    o.max_iter = 1;
    const SigmaSolution s = solve_sigma_from(p, {5, 5, 5, 5, 5, 5, 5}, o);
    EXPECT_FALSE(s.converged);
    EXPECT_GT(s.residual, 1e-6);
}
