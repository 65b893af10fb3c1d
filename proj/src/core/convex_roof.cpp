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

#include "convex_roof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "errors.hpp"

namespace tetrafill {

namespace {

constexpr double kZeroWeight = 1e-14;
constexpr int kMaxEnsembleSize = 64;
constexpr int kCoarseGrid = 8;
constexpr int kGoldenSteps = 12;

PureState placeholder() { return named_state(NamedState::Product4); }

// Cost of one decomposition member: w * F4(psi). Members where the solver
// fails are priced out so the search never moves onto them.
class MemberCost {
  public:
    MemberCost(const ComplexMatrix &w, const SolverOptions &solver, long &evaluations)
        : w_(w), solver_(solver), evaluations_(evaluations) {}

    double operator()(const Eigen::RowVectorXcd &row) const {
        const StateVector psi = w_ * row.transpose();
        const double weight = psi.squaredNorm();
        if (weight < kZeroWeight) return 0.0;
        ++evaluations_;
        try {
            return weight * concurrence_fill_4(PureState::from_vector(4, psi), solver_);
        } catch (const Error &) {
            return std::numeric_limits<double>::infinity();
        }
    }

  private:
    const ComplexMatrix &w_;
    const SolverOptions &solver_;
    long &evaluations_;
};

void rotate_rows(ComplexMatrix &u, int a, int b, double theta, double phi) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Complex e = std::polar(1.0, phi);
    const Eigen::RowVectorXcd ra = u.row(a);
    const Eigen::RowVectorXcd rb = u.row(b);
    u.row(a) = c * ra - e * s * rb;
    u.row(b) = std::conj(e) * s * ra + c * rb;
}

struct StartResult {
    double value = 0.0;
    ComplexMatrix isometry;
};

StartResult optimize(const MixedState &rho, ComplexMatrix u, const ConvexRoofOptions &options, std::uint64_t seed,
                     long &evaluations) {
    const int m = static_cast<int>(u.rows());
    const MemberCost cost(rho.weighted_eigenvectors(), options.solver, evaluations);
    std::vector<double> member(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) member[i] = cost(u.row(i));

    std::vector<std::array<int, 2>> pairs;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) pairs.push_back({a, b});
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);

    for (int step = 0; step < options.budget && !pairs.empty(); ++step) {
        const auto [a, b] = pairs[static_cast<std::size_t>(step) % pairs.size()];
        const double phi = phase(rng);
        const double current = member[a] + member[b];
        if (!(current > 0.0)) continue;

        auto pair_cost = [&](double theta) {
            ComplexMatrix trial = u;
            rotate_rows(trial, a, b, theta, phi);
            return cost(trial.row(a)) + cost(trial.row(b));
        };

        // The rotation has period pi in theta. Coarse grid, then golden
        // section inside the best grid cell.
        const double cell = std::numbers::pi / kCoarseGrid;
        double best_theta = 0.0;
        double best = current;
        for (int g = 1; g < kCoarseGrid; ++g) {
            const double theta = -0.5 * std::numbers::pi + g * cell;
            if (g == kCoarseGrid / 2) continue;  // theta = 0 is `current`
            const double value = pair_cost(theta);
            if (value < best) {
                best = value;
                best_theta = theta;
            }
        }
        const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
        double lo = best_theta - cell;
        double hi = best_theta + cell;
        double x1 = hi - ratio * (hi - lo);
        double x2 = lo + ratio * (hi - lo);
        double f1 = pair_cost(x1);
        double f2 = pair_cost(x2);
        for (int it = 0; it < kGoldenSteps; ++it) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - ratio * (hi - lo);
                f1 = pair_cost(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + ratio * (hi - lo);
                f2 = pair_cost(x2);
            }
        }
        if (f1 < best) {
            best = f1;
            best_theta = x1;
        }
        if (f2 < best) {
            best = f2;
            best_theta = x2;
        }

        if (best < current) {
            rotate_rows(u, a, b, best_theta, phi);
            member[a] = cost(u.row(a));
            member[b] = cost(u.row(b));
        }
    }

    StartResult out;
    for (double c : member) out.value += c;
    out.isometry = std::move(u);
    return out;
}

}  // namespace

MixedState MixedState::make(const DensityMatrix &rho) {
    if (rho.dim() != 16) throw Error(ErrorCode::DimensionMismatch, "mixed states must be 16 x 16");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rho.matrix());
    std::vector<int> kept;
    for (int k = 15; k >= 0; --k) {
        if (eig.eigenvalues()[k] > kRankTol) kept.push_back(k);
    }
    ComplexMatrix w(16, static_cast<Eigen::Index>(kept.size()));
    for (std::size_t c = 0; c < kept.size(); ++c) {
        w.col(static_cast<Eigen::Index>(c)) = std::sqrt(eig.eigenvalues()[kept[c]]) * eig.eigenvectors().col(kept[c]);
    }
    return MixedState(rho, std::move(w));
}

int default_ensemble_size(int rank) { return std::max(rank, std::min(2 * rank, 16)); }

Decomposition decomposition_from_isometry(const MixedState &rho, const ComplexMatrix &isometry) {
    const int r = rho.rank();
    if (isometry.cols() != r || isometry.rows() < r) {
        throw Error(ErrorCode::InvalidArgument, "mixing isometry must be m x rank with m >= rank");
    }
    const ComplexMatrix gram = isometry.adjoint() * isometry;
    if ((gram - ComplexMatrix::Identity(r, r)).cwiseAbs().maxCoeff() > 1e-10) {
        throw Error(ErrorCode::InvalidArgument, "mixing matrix columns are not orthonormal");
    }
    Decomposition d;
    d.mixing_isometry = isometry;
    for (Eigen::Index i = 0; i < isometry.rows(); ++i) {
        const StateVector psi = rho.weighted_eigenvectors() * isometry.row(i).transpose();
        const double weight = psi.squaredNorm();
        d.weights.push_back(weight);
        d.states.push_back(weight < kZeroWeight ? placeholder() : PureState::from_vector(4, psi));
    }
    return d;
}

ComplexMatrix reconstruct(const Decomposition &d) {
    ComplexMatrix rho = ComplexMatrix::Zero(16, 16);
    for (std::size_t i = 0; i < d.states.size(); ++i) {
        if (d.weights[i] < kZeroWeight) continue;
        const StateVector &psi = d.states[i].amplitudes();
        rho += d.weights[i] * psi * psi.adjoint();
    }
    return rho;
}

double average_f4(const Decomposition &d, const SolverOptions &options) {
    double total = 0.0;
    for (std::size_t i = 0; i < d.states.size(); ++i) {
        if (d.weights[i] < kZeroWeight) continue;
        total += d.weights[i] * concurrence_fill_4(d.states[i], options);
    }
    return total;
}

ConvexRoofResult convex_roof_f4(const MixedState &rho, const ConvexRoofOptions &options) {
    const int r = rho.rank();
    const int m = options.ensemble_size == 0 ? default_ensemble_size(r) : options.ensemble_size;
    if (m < r) {
        throw Error(ErrorCode::InvalidArgument,
                    "ensemble size " + std::to_string(m) + " is below the rank " + std::to_string(r));
    }
    if (m > kMaxEnsembleSize) throw Error(ErrorCode::InvalidArgument, "ensemble size too large");
    if (options.budget < 0 || options.starts < 1) {
        throw Error(ErrorCode::InvalidArgument, "budget must be >= 0 and starts >= 1");
    }

    ConvexRoofResult result;
    result.value = std::numeric_limits<double>::infinity();
    for (int s = 0; s < options.starts; ++s) {
        const std::uint64_t seed = derive_seed(options.seed, static_cast<std::uint64_t>(s));
        ComplexMatrix u;
        if (s == 0) {
            u = ComplexMatrix::Identity(m, r);
        } else {
            u = haar_random_unitary(m, seed).leftCols(r);
        }
        StartResult start = optimize(rho, std::move(u), options, seed, result.evaluations);
        result.start_values.push_back(start.value);
        if (start.value < result.value) {
            result.value = start.value;
            result.best = decomposition_from_isometry(rho, start.isometry);
        }
    }
    if (!std::isfinite(result.value)) {
        throw Error(ErrorCode::InternalConsistency, "no start produced a feasible decomposition");
    }
    const auto [lo, hi] = std::minmax_element(result.start_values.begin(), result.start_values.end());
    result.spread = *hi - *lo;
    return result;
}

}  // namespace tetrafill
