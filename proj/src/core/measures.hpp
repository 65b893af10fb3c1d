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

// Genuine multipartite entanglement measures for three and four qubits.
//
// All concurrence-based measures here work on squared concurrences:
//   F4  = (3^{7/4} / 2^{3/2}) V, V the concurrence tetrahedron volume
//   GMC = min of the seven profile entries
//   GBC = geometric mean of the seven profile entries
//   F3  = Heron area of the triangle with sides C^2_{i(jk)}, scaled so GHZ3 -> 1

#pragma once

#include <cmath>

#include "concurrence.hpp"
#include "tetra_solver.hpp"

namespace tetrafill {

/// Maps the regular tetrahedron of the GHZ state to F4 = 1.
inline const double kF4Prefactor = std::pow(3.0, 1.75) / std::pow(2.0, 1.5);
/// Maps the unit equilateral triangle of the GHZ3 state to F3 = 1.
inline const double kF3Prefactor = 4.0 / std::sqrt(3.0);
/// Overshoot above 1 tolerated before clamping; larger is an error.
inline constexpr double kMeasureOvershootTol = 1e-9;

struct TetraReport {
    SigmaSolution sigma;
    VolumeBreakdown volume;
    double f4 = 0.0;
    DegeneracyClass degeneracy = DegeneracyClass::Generic;
};

/// Solves the tetrahedron of a profile and normalizes its volume. Throws
/// InternalConsistency if the impossible coplanar pattern shows up.
TetraReport tetra_report(const ConcurrenceProfile &profile, const SolverOptions &options = {});

double concurrence_fill_4(const PureState &state, const SolverOptions &options = {});

double gmc(const ConcurrenceProfile &profile);
double gmc(const PureState &state);

double gbc(const ConcurrenceProfile &profile);
double gbc(const PureState &state);

double concurrence_fill_3(const PureState &state);

/// Brahmagupta area with the four one-to-other entries as sides. Kept only
/// to show that it stays positive for biseparable states.
double cyclic_quadrilateral_area(const ConcurrenceProfile &profile);

struct MeasureReport {
    double f4 = 0.0;
    double gmc = 0.0;
    double gbc = 0.0;
    double cyclic_quad_area = 0.0;
    DegeneracyClass degeneracy = DegeneracyClass::Generic;
    ConcurrenceProfile profile;
    TetraReport tetra;
};

MeasureReport measure(const PureState &state, const SolverOptions &options = {});

}  // namespace tetrafill
