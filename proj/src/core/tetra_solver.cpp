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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "errors.hpp"

namespace tetrafill {

namespace {

using Vec7 = Eigen::Matrix<double, 7, 1>;
using Mat7 = Eigen::Matrix<double, 7, 7>;

// Opposite-edge pairs (indices into kQubitPairs), in kTwoTwoCuts order.
constexpr std::array<std::array<int, 2>, 3> kOpposite = {{{0, 5}, {1, 4}, {2, 3}}};

constexpr double kNegativeBracketTol = 1e-12;

bool touches(int pair, int face) { return kQubitPairs[pair][0] == face || kQubitPairs[pair][1] == face; }

struct Snapped {
    std::array<double, 4> one{};
    std::array<double, 3> two{};
};

Snapped snap(const ConcurrenceProfile &profile) {
    Snapped s;
    for (int i = 0; i < 4; ++i) s.one[i] = profile.one_to_other[i] <= kDegenerateTol ? 0.0 : profile.one_to_other[i];
    for (int k = 0; k < 3; ++k) s.two[k] = profile.two_to_other[k] <= kDegenerateTol ? 0.0 : profile.two_to_other[k];
    return s;
}

Vec7 residuals(const Snapped &p, const Vec7 &x) {
    Vec7 f;
    for (int i = 0; i < 4; ++i) {
        double sum = 0.0;
        for (int q = 0; q < 6; ++q) {
            if (touches(q, i + 1)) sum += x[q] * x[q];
        }
        f[i] = sum - p.one[i];
    }
    std::array<double, 3> prod{};
    for (int k = 0; k < 3; ++k) prod[k] = x[kOpposite[k][0]] * x[kOpposite[k][1]];
    const double total = prod[0] + prod[1] + prod[2];
    for (int k = 0; k < 3; ++k) f[4 + k] = total - 2.0 * prod[k] - x[6] * p.two[k];
    return f;
}

Mat7 jacobian(const Snapped &p, const Vec7 &x) {
    Mat7 jac = Mat7::Zero();
    for (int i = 0; i < 4; ++i) {
        for (int q = 0; q < 6; ++q) {
            if (touches(q, i + 1)) jac(i, q) = 2.0 * x[q];
        }
    }
    for (int k = 0; k < 3; ++k) {
        for (int j = 0; j < 3; ++j) {
            const double sign = j == k ? -1.0 : 1.0;
            const int a = kOpposite[j][0];
            const int b = kOpposite[j][1];
            jac(4 + k, a) += sign * x[b];
            jac(4 + k, b) += sign * x[a];
        }
        jac(4 + k, 6) = -p.two[k];
    }
    return jac;
}

double residual_in_sigma(const Snapped &p, const std::array<double, 6> &sigma, double lambda) {
    Vec7 x;
    for (int q = 0; q < 6; ++q) x[q] = std::sqrt(std::max(sigma[q], 0.0));
    x[6] = lambda;
    return residuals(p, x).cwiseAbs().maxCoeff();
}

SigmaSolution newton(const Snapped &p, Vec7 x, const SolverOptions &options) {
    SigmaSolution out;
    int it = 0;
    Vec7 f = residuals(p, x);
    for (; it < options.max_iter; ++it) {
        if (f.cwiseAbs().maxCoeff() <= options.tol) break;
        const Mat7 jac = jacobian(p, x);
        Eigen::FullPivLU<Mat7> lu(jac);
        Vec7 dx;
        if (lu.isInvertible()) {
            dx = lu.solve(-f);
        } else {
            dx = jac.completeOrthogonalDecomposition().solve(-f);
        }
        if (!dx.allFinite()) break;

        // Step halving until the residual norm drops.
        const double norm0 = f.norm();
        bool accepted = false;
        for (double t = 1.0; t >= 1e-10; t *= 0.5) {
            const Vec7 trial = x + t * dx;
            const Vec7 ft = residuals(p, trial);
            if (ft.allFinite() && ft.norm() < norm0) {
                x = trial;
                f = ft;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }

    // The signed system has extra roots where some u < 0; only roots that
    // survive u -> |u| solve the equations in sigma.
    for (int q = 0; q < 6; ++q) out.sigma[q] = x[q] * x[q];
    out.lambda = x[6];
    out.iterations = it;
    out.residual = residual_in_sigma(p, out.sigma, out.lambda);
    out.converged = out.residual <= options.tol && out.lambda >= -kNegativeBracketTol && x.allFinite();
    if (out.converged) out.lambda = std::max(out.lambda, 0.0);
    return out;
}

// Closed forms for profiles with a vanishing face: every sigma touching a
// zero face vanishes, the remaining face equations are linear, and all cut
// equations reduce to lambda * C^2 = 0.
SigmaSolution one_to_other_limit(const Snapped &p) {
    SigmaSolution out;
    std::vector<int> live;
    for (int i = 0; i < 4; ++i) {
        if (p.one[i] > 0.0) live.push_back(i + 1);
    }
    if (live.size() == 3) {
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) {
                const int c = 3 - a - b;
                const double value = 0.5 * (p.one[live[a] - 1] + p.one[live[b] - 1] - p.one[live[c] - 1]);
                out.sigma[pair_index(live[a], live[b])] = std::max(value, 0.0);
            }
        }
    } else if (live.size() == 2) {
        out.sigma[pair_index(live[0], live[1])] = 0.5 * (p.one[live[0] - 1] + p.one[live[1] - 1]);
    }
    out.lambda = 0.0;
    out.residual = residual_in_sigma(p, out.sigma, out.lambda);
    out.converged = true;
    out.degenerate = true;
    return out;
}

VolumeBreakdown brackets(const std::array<double, 6> &s) {
    VolumeBreakdown vb;
    for (double v : s) vb.S += 2.0 * v;
    const double x = std::sqrt(s[0] * s[5]);
    const double y = std::sqrt(s[1] * s[4]);
    const double z = std::sqrt(s[2] * s[3]);
    vb.A0 = x + y + z;
    vb.A1 = -x + y + z;
    vb.A2 = x - y + z;
    vb.A3 = x + y - z;
    return vb;
}

double volume_from(const VolumeBreakdown &vb) {
    return std::sqrt(2.0) / 3.0 * std::sqrt(vb.S) * std::pow(vb.A0 * vb.A1 * vb.A2 * vb.A3, 0.25);
}

Vec7 to_vec(const std::array<double, 7> &a) { return Eigen::Map<const Vec7>(a.data()); }

void check_feasible(const ConcurrenceProfile &profile) {
    const SimplexReport simplex = check_simplex_inequality(profile);
    if (!simplex.holds) {
        throw Error(ErrorCode::InfeasibleProfile,
                    "profile violates the simplex inequality (margin " + std::to_string(simplex.worst_margin) + ")");
    }
    for (double c : profile.one_to_other) {
        if (c < 0.0 || !std::isfinite(c)) throw Error(ErrorCode::InfeasibleProfile, "negative face area");
    }
    for (double c : profile.two_to_other) {
        if (c < 0.0 || !std::isfinite(c)) throw Error(ErrorCode::InfeasibleProfile, "negative two-to-other entry");
    }
}

bool has_zero_face(const Snapped &p) {
    return std::any_of(p.one.begin(), p.one.end(), [](double c) { return c == 0.0; });
}

bool has_zero_cut(const Snapped &p) {
    return std::any_of(p.two.begin(), p.two.end(), [](double c) { return c == 0.0; });
}

std::array<double, 7> perturbed(const std::array<double, 7> &base, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> jitter(-1.0, 1.0);
    std::array<double, 7> out = base;
    for (double &v : out) v *= std::exp(jitter(rng));
    return out;
}

}  // namespace

std::string_view to_string(DegeneracyClass c) {
    switch (c) {
        case DegeneracyClass::Generic: return "Generic";
        case DegeneracyClass::TwoToOtherBisep: return "TwoToOtherBisep";
        case DegeneracyClass::OneToOtherBisep: return "OneToOtherBisep";
        case DegeneracyClass::CoplanarImpossible: return "CoplanarImpossible";
        case DegeneracyClass::ProductDot: return "ProductDot";
    }
    return "?";
}

DegeneracyClass parse_degeneracy(std::string_view name) {
    for (auto c : {DegeneracyClass::Generic, DegeneracyClass::TwoToOtherBisep, DegeneracyClass::OneToOtherBisep,
                   DegeneracyClass::CoplanarImpossible, DegeneracyClass::ProductDot}) {
        if (to_string(c) == name) return c;
    }
    throw Error(ErrorCode::Parse, "unknown degeneracy class '" + std::string(name) + "'");
}

std::array<double, 7> initial_guess(const ConcurrenceProfile &profile) {
    const Snapped p = snap(profile);
    Eigen::Matrix<double, 4, 6> incidence = Eigen::Matrix<double, 4, 6>::Zero();
    for (int i = 0; i < 4; ++i) {
        for (int q = 0; q < 6; ++q) {
            if (touches(q, i + 1)) incidence(i, q) = 1.0;
        }
    }
    const Eigen::Vector4d faces(p.one[0], p.one[1], p.one[2], p.one[3]);
    const Eigen::Matrix<double, 6, 1> sigma0 =
        incidence.transpose() * (incidence * incidence.transpose()).ldlt().solve(faces);

    const double floor = 1e-3 * std::max(faces.maxCoeff(), 1e-6);
    std::array<double, 7> start{};
    for (int q = 0; q < 6; ++q) start[q] = std::sqrt(std::max(sigma0[q], floor));

    int k = static_cast<int>(std::max_element(p.two.begin(), p.two.end()) - p.two.begin());
    std::array<double, 3> prod{};
    for (int j = 0; j < 3; ++j) prod[j] = start[kOpposite[j][0]] * start[kOpposite[j][1]];
    const double lhs = prod[0] + prod[1] + prod[2] - 2.0 * prod[k];
    double lambda = p.two[k] > 0.0 ? lhs / p.two[k] : 0.0;
    if (!(lambda > 0.0)) lambda = 0.5 * (prod[0] + prod[1] + prod[2]) / std::max(p.two[k], 1e-3);
    start[6] = lambda;
    return start;
}

SigmaSolution solve_sigma_from(const ConcurrenceProfile &profile, const std::array<double, 7> &start,
                               const SolverOptions &options) {
    const Snapped p = snap(profile);
    SigmaSolution sol = newton(p, to_vec(start), options);
    sol.degenerate = has_zero_cut(p);
    return sol;
}

double equation_residual(const ConcurrenceProfile &profile, const std::array<double, 6> &sigma, double lambda) {
    const Snapped p{profile.one_to_other, profile.two_to_other};
    return residual_in_sigma(p, sigma, lambda);
}

SigmaSolution solve_sigma(const ConcurrenceProfile &profile, const SolverOptions &options) {
    check_feasible(profile);
    const Snapped p = snap(profile);
    if (has_zero_face(p)) return one_to_other_limit(p);

    // A vanishing cut has no closed form; Newton still applies since the
    // lambda column only loses one entry. The volume is forced to zero.
    const bool degenerate = has_zero_cut(p);
    const std::array<double, 7> base = initial_guess(profile);
    std::mt19937_64 rng(options.seed);
    SigmaSolution best;
    best.residual = std::numeric_limits<double>::infinity();
    int total_iterations = 0;
    for (int attempt = 0; attempt <= options.restarts; ++attempt) {
        const std::array<double, 7> start = attempt == 0 ? base : perturbed(base, rng);
        SigmaSolution sol = newton(p, to_vec(start), options);
        total_iterations += sol.iterations;
        if (sol.residual < best.residual) best = sol;
        if (sol.converged) break;
    }
    best.iterations = total_iterations;
    best.degenerate = degenerate;
    if (!best.converged) {
        throw Error(ErrorCode::NonConvergence, "sigma solve did not converge (best residual " +
                                                   std::to_string(best.residual) + " after " +
                                                   std::to_string(options.restarts + 1) + " starts)");
    }
    return best;
}

VolumeBreakdown volume(const std::array<double, 6> &sigma) {
    for (double s : sigma) {
        if (s < 0.0 || !std::isfinite(s)) throw Error(ErrorCode::InvalidArgument, "split areas must be nonnegative");
    }
    VolumeBreakdown vb = brackets(sigma);
    for (double *a : {&vb.A1, &vb.A2, &vb.A3}) {
        if (*a < -kNegativeBracketTol) {
            throw Error(ErrorCode::InvalidArgument, "split areas do not describe a tetrahedron");
        }
        *a = std::max(*a, 0.0);
    }
    vb.V = volume_from(vb);
    return vb;
}

VolumeBreakdown volume(const SigmaSolution &solution) {
    std::array<double, 6> sigma = solution.sigma;
    for (double &s : sigma) {
        if (s < -1e-10) throw Error(ErrorCode::InvalidArgument, "split areas must be nonnegative");
        s = std::max(s, 0.0);
    }
    VolumeBreakdown vb = brackets(sigma);
    if (solution.degenerate) {
        for (double *a : {&vb.A1, &vb.A2, &vb.A3}) *a = std::max(*a, 0.0);
        vb.V = 0.0;
        return vb;
    }
    for (double *a : {&vb.A1, &vb.A2, &vb.A3}) {
        if (*a < -kNegativeBracketTol) {
            throw Error(ErrorCode::InternalConsistency,
                        "negative volume bracket " + std::to_string(*a) + " on a nondegenerate solution");
        }
        *a = std::max(*a, 0.0);
    }
    vb.V = volume_from(vb);
    return vb;
}

DegeneracyClass classify_degeneracy(const ConcurrenceProfile &profile, const SigmaSolution &solution) {
    const Snapped p = snap(profile);
    const int zero_faces = static_cast<int>(std::count(p.one.begin(), p.one.end(), 0.0));
    if (zero_faces == 4) return DegeneracyClass::ProductDot;
    if (zero_faces > 0) return DegeneracyClass::OneToOtherBisep;
    if (has_zero_cut(p)) return DegeneracyClass::TwoToOtherBisep;
    if (volume(solution).V > kZeroVolumeTol) return DegeneracyClass::Generic;
    // Zero volume with every concurrence positive is the coplanar pattern
    // sigma_jk = sigma_kl = sigma_lj = 0, which no physical state produces.
    return DegeneracyClass::CoplanarImpossible;
}

UniquenessReport verify_uniqueness(const ConcurrenceProfile &profile, int n_starts, std::uint64_t seed,
                                   const SolverOptions &options) {
    if (n_starts < 1) throw Error(ErrorCode::InvalidArgument, "need at least one start");
    check_feasible(profile);
    const Snapped p = snap(profile);
    UniquenessReport report;
    if (has_zero_face(p)) {
        report.solutions.assign(static_cast<std::size_t>(n_starts), one_to_other_limit(p));
    } else {
        const std::array<double, 7> base = initial_guess(profile);
        for (int s = 0; s < n_starts; ++s) {
            std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
            SigmaSolution sol;
            for (int attempt = 0; attempt <= options.restarts && !sol.converged; ++attempt) {
                sol = newton(p, to_vec(perturbed(base, rng)), options);
            }
            if (!sol.converged) {
                throw Error(ErrorCode::NonConvergence, "uniqueness start " + std::to_string(s) + " did not converge");
            }
            sol.degenerate = has_zero_cut(p);
            report.solutions.push_back(sol);
        }
    }
    report.min_sigma = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < report.solutions.size(); ++a) {
        for (double s : report.solutions[a].sigma) report.min_sigma = std::min(report.min_sigma, s);
        for (std::size_t b = a + 1; b < report.solutions.size(); ++b) {
            for (int q = 0; q < 6; ++q) {
                report.max_spread = std::max(report.max_spread,
                                             std::abs(report.solutions[a].sigma[q] - report.solutions[b].sigma[q]));
            }
        }
    }
    report.all_converged_same = report.max_spread < kUniquenessTol;
    return report;
}

}  // namespace tetrafill
