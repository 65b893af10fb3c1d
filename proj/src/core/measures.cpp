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

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace tetrafill {

namespace {

double checked_unit(double value, const char *what) {
    if (!std::isfinite(value) || value < -kMeasureOvershootTol || value > 1.0 + kMeasureOvershootTol) {
        throw Error(ErrorCode::InternalConsistency, std::string(what) + " outside [0, 1]: " + std::to_string(value));
    }
    return std::clamp(value, 0.0, 1.0);
}

// Entries at roundoff level are zero, matching the tetrahedron solver, so
// all three measures agree on which states are biseparable.
std::array<double, 7> entries(const ConcurrenceProfile &p) {
    std::array<double, 7> e = {p.one_to_other[0], p.one_to_other[1], p.one_to_other[2], p.one_to_other[3],
                               p.two_to_other[0], p.two_to_other[1], p.two_to_other[2]};
    for (double &c : e) {
        if (c <= kDegenerateTol) c = 0.0;
    }
    return e;
}

}  // namespace

TetraReport tetra_report(const ConcurrenceProfile &profile, const SolverOptions &options) {
    TetraReport report;
    report.sigma = solve_sigma(profile, options);
    report.volume = volume(report.sigma);
    report.degeneracy = classify_degeneracy(profile, report.sigma);
    if (report.degeneracy == DegeneracyClass::CoplanarImpossible) {
        throw Error(ErrorCode::InternalConsistency, "coplanar tetrahedron with all concurrences positive");
    }
    report.f4 = report.degeneracy == DegeneracyClass::Generic ? kF4Prefactor * report.volume.V : 0.0;
    return report;
}

double concurrence_fill_4(const PureState &state, const SolverOptions &options) {
    return checked_unit(tetra_report(concurrence_profile(state), options).f4, "F4");
}

double gmc(const ConcurrenceProfile &profile) {
    const auto e = entries(profile);
    return *std::min_element(e.begin(), e.end());
}

double gmc(const PureState &state) { return checked_unit(gmc(concurrence_profile(state)), "GMC"); }

double gbc(const ConcurrenceProfile &profile) {
    double log_sum = 0.0;
    for (double c : entries(profile)) {
        if (c <= 0.0) return 0.0;
        log_sum += std::log(c);
    }
    return std::exp(log_sum / 7.0);
}

double gbc(const PureState &state) { return checked_unit(gbc(concurrence_profile(state)), "GBC"); }

double concurrence_fill_3(const PureState &state) {
    const auto c = one_to_other_3(state);
    const double s = c[0] + c[1] + c[2];
    double heron = s * (-c[0] + c[1] + c[2]) * (c[0] - c[1] + c[2]) * (c[0] + c[1] - c[2]);
    // Roundoff can push a degenerate triangle's product slightly negative.
    heron = std::max(heron, 0.0);
    return checked_unit(kF3Prefactor * 0.25 * std::sqrt(heron), "F3");
}

double cyclic_quadrilateral_area(const ConcurrenceProfile &profile) {
    const auto &e = profile.one_to_other;
    const double s = 0.5 * (e[0] + e[1] + e[2] + e[3]);
    double product = 1.0;
    for (double side : e) product *= std::max(s - side, 0.0);
    return std::sqrt(product);
}

MeasureReport measure(const PureState &state, const SolverOptions &options) {
    MeasureReport report;
    report.profile = concurrence_profile(state);
    report.tetra = tetra_report(report.profile, options);
    report.f4 = checked_unit(report.tetra.f4, "F4");
    report.gmc = checked_unit(gmc(report.profile), "GMC");
    report.gbc = checked_unit(gbc(report.profile), "GBC");
    report.cyclic_quad_area = cyclic_quadrilateral_area(report.profile);
    report.degeneracy = report.tetra.degeneracy;
    return report;
}

}  // namespace tetrafill
