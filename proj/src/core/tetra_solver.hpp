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

// The concurrence tetrahedron.
//
// Face i of the tetrahedron has area C^2_{i(jkl)}. The inscribed sphere
// touches each face at one point; joining it to the face's corners splits the
// face into three triangles, and the two triangles meeting along an edge have
// equal area. sigma_ij is that area for the edge shared by faces i and j, so
//
//     sigma_ij + sigma_ik + sigma_il = C^2_{i(jkl)}                      (faces)
//     -r(ij,kl) + r(ik,jl) + r(il,jk) = lambda * C^2_{(ij)(kl)}          (cuts)
//
// with r(ab,cd) = sqrt(sigma_ab sigma_cd). The seven equations fix the six
// sigmas and the auxiliary lambda. They are solved in u = sqrt(sigma), where
// the cut equations become bilinear and the square root singularity at
// sigma = 0 disappears.

#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "concurrence.hpp"

namespace tetrafill {

/// Profile entries at or below this are treated as exactly zero.
inline constexpr double kDegenerateTol = 1e-9;
/// Volumes at or below this count as zero when classifying.
inline constexpr double kZeroVolumeTol = 1e-12;
/// Largest acceptable spread between multi-start solutions.
inline constexpr double kUniquenessTol = 1e-7;

struct SolverOptions {
    double tol = 1e-12;
    int max_iter = 200;
    int restarts = 16;
    std::uint64_t seed = 0;
};

struct SigmaSolution {
    /// Split areas in kQubitPairs order (12, 13, 14, 23, 24, 34).
    std::array<double, 6> sigma{};
    double lambda = 0.0;
    /// Max absolute residual over all seven equations.
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
    /// Set for biseparable profiles; the volume is then exactly zero.
    bool degenerate = false;
};

struct VolumeBreakdown {
    double S = 0.0;
    double A0 = 0.0;
    double A1 = 0.0;
    double A2 = 0.0;
    double A3 = 0.0;
    double V = 0.0;
};

enum class DegeneracyClass {
    Generic,
    TwoToOtherBisep,
    OneToOtherBisep,
    CoplanarImpossible,
    ProductDot,
};

std::string_view to_string(DegeneracyClass c);
DegeneracyClass parse_degeneracy(std::string_view name);

/// Throws InfeasibleProfile when the simplex inequality fails and
/// NonConvergence when no start reaches `options.tol`.
SigmaSolution solve_sigma(const ConcurrenceProfile &profile, const SolverOptions &options = {});

/// One damped Newton run from an explicit start (u_12..u_34, lambda). The
/// result is not checked against the tolerance; inspect `converged`.
SigmaSolution solve_sigma_from(const ConcurrenceProfile &profile, const std::array<double, 7> &start,
                               const SolverOptions &options = {});

/// The deterministic first start: min-norm solution of the face equations,
/// floored to stay positive, with lambda from the largest cut equation.
std::array<double, 7> initial_guess(const ConcurrenceProfile &profile);

/// Max absolute residual of the seven equations at (sigma, lambda).
double equation_residual(const ConcurrenceProfile &profile, const std::array<double, 6> &sigma, double lambda);

/// Volume of the tetrahedron with the given split areas. Throws
/// InvalidArgument for negative sigma or sigma that admit no tetrahedron.
VolumeBreakdown volume(const std::array<double, 6> &sigma);

/// As above, but a degenerate solution has V = 0 and a negative bracket on a
/// nondegenerate solution is an InternalConsistency error.
VolumeBreakdown volume(const SigmaSolution &solution);

DegeneracyClass classify_degeneracy(const ConcurrenceProfile &profile, const SigmaSolution &solution);

struct UniquenessReport {
    bool all_converged_same = false;
    /// Max pairwise infinity-norm distance between converged sigma vectors.
    double max_spread = 0.0;
    double min_sigma = 0.0;
    std::vector<SigmaSolution> solutions;
};

/// Solves from `n_starts` randomized starts. Throws NonConvergence if a start
/// fails to converge after resampling.
UniquenessReport verify_uniqueness(const ConcurrenceProfile &profile, int n_starts, std::uint64_t seed,
                                   const SolverOptions &options = {});

}  // namespace tetrafill
