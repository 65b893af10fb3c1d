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

// Reference computations for the tests. They deliberately take different
// routes from the library: explicit index loops instead of reshapes, the
// non-Hermitian spin-flip product instead of the Hermitian one, determinants
// instead of closed forms, and a separate random number pipeline.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;

inline int bit(int index, int qubit, int n) { return (index >> (n - qubit)) & 1; }

// Reduced density matrix onto `keep` (1-based, ascending) by summing over
// every pair of full basis indices that agree on the traced qubits.
inline Eigen::MatrixXcd partial_trace(const Eigen::VectorXcd &psi, int n, const std::vector<int> &keep) {
    const int dim = 1 << n;
    const int k = static_cast<int>(keep.size());
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(1 << k, 1 << k);
    auto kept_index = [&](int b) {
        int r = 0;
        for (int q : keep) r = (r << 1) | bit(b, q, n);
        return r;
    };
    auto traced_equal = [&](int a, int b) {
        for (int q = 1; q <= n; ++q) {
            if (std::find(keep.begin(), keep.end(), q) != keep.end()) continue;
            if (bit(a, q, n) != bit(b, q, n)) return false;
        }
        return true;
    };
    for (int a = 0; a < dim; ++a) {
        for (int b = 0; b < dim; ++b) {
            if (traced_equal(a, b)) rho(kept_index(a), kept_index(b)) += psi[a] * std::conj(psi[b]);
        }
    }
    return rho;
}

inline double purity(const Eigen::MatrixXcd &rho) { return (rho * rho).trace().real(); }

inline double i_concurrence_sq(const Eigen::VectorXcd &psi, int n, const std::vector<int> &keep) {
    return 2.0 * (1.0 - purity(partial_trace(psi, n, keep)));
}

// C^2 via the square roots of the eigenvalues of rho * (sy sy) rho^* (sy sy).
inline double wootters_sq(const Eigen::Matrix4cd &rho) {
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Eigen::Matrix4cd r = rho * yy * rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(r);
    std::array<double, 4> l{};
    for (int i = 0; i < 4; ++i) l[i] = std::sqrt(std::max(0.0, es.eigenvalues()[i].real()));
    std::sort(l.begin(), l.end(), std::greater<>());
    const double c = std::max(0.0, l[0] - l[1] - l[2] - l[3]);
    return c * c;
}

inline double heron(double a, double b, double c) {
    const double s = 0.5 * (a + b + c);
    return std::sqrt(std::max(0.0, s * (s - a) * (s - b) * (s - c)));
}

inline double triangle_area(const Eigen::Vector3d &a, const Eigen::Vector3d &b, const Eigen::Vector3d &c) {
    return heron((a - b).norm(), (b - c).norm(), (c - a).norm());
}

// Cayley-Menger determinant; d[a][b] is the distance between vertices a, b.
inline double cayley_menger_volume(const std::array<std::array<double, 4>, 4> &d) {
    Eigen::Matrix<double, 5, 5> m = Eigen::Matrix<double, 5, 5>::Ones();
    m(0, 0) = 0.0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) m(a + 1, b + 1) = d[a][b] * d[a][b];
    }
    return std::sqrt(std::max(0.0, m.determinant() / 288.0));
}

// Everything the tests need about a tetrahedron, computed from vertices.
// Vertex m is opposite face m; pair (i, j) of faces shares the edge joining
// the other two vertices.
struct Tetra {
    std::array<double, 4> face_areas{};
    std::array<double, 6> sigma{};  // pairs 12, 13, 14, 23, 24, 34 (faces)
    double volume = 0.0;
    Eigen::Vector3d incenter;
    double inradius = 0.0;
};

inline constexpr std::array<std::array<int, 2>, 6> kPairs = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline Tetra analyze(const std::array<Eigen::Vector3d, 4> &v) {
    Tetra t;
    std::array<std::array<double, 4>, 4> d{};
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) d[a][b] = (v[a] - v[b]).norm();
    }
    t.volume = cayley_menger_volume(d);

    // Incenter from four plane-distance equations n_m . x - r = n_m . p_m,
    // with n_m the inward unit normal of face m.
    Eigen::Matrix4d a;
    Eigen::Vector4d rhs;
    std::array<Eigen::Vector3d, 4> normal;
    for (int m = 0; m < 4; ++m) {
        std::array<int, 3> f{};
        int c = 0;
        for (int q = 0; q < 4; ++q) {
            if (q != m) f[c++] = q;
        }
        Eigen::Vector3d n = (v[f[1]] - v[f[0]]).cross(v[f[2]] - v[f[0]]).normalized();
        if (n.dot(v[m] - v[f[0]]) < 0.0) n = -n;
        normal[m] = n;
        a.row(m) << n.x(), n.y(), n.z(), -1.0;
        rhs[m] = n.dot(v[f[0]]);
        t.face_areas[m] = triangle_area(v[f[0]], v[f[1]], v[f[2]]);
    }
    const Eigen::Vector4d x = a.fullPivLu().solve(rhs);
    t.incenter = x.head<3>();
    t.inradius = x[3];

    for (int p = 0; p < 6; ++p) {
        const int i = kPairs[p][0];
        std::array<int, 2> edge{};
        int c = 0;
        for (int q = 0; q < 4; ++q) {
            if (q != kPairs[p][0] && q != kPairs[p][1]) edge[c++] = q;
        }
        const Eigen::Vector3d contact = t.incenter - t.inradius * normal[i];
        t.sigma[p] = triangle_area(v[edge[0]], v[edge[1]], contact);
    }
    return t;
}

// The three cut brackets -r(12,34) + r(13,24) + r(14,23) and permutations,
// in 12|34, 13|24, 14|23 order.
inline std::array<double, 3> cut_brackets(const std::array<double, 6> &s) {
    const double r12_34 = std::sqrt(s[0] * s[5]);
    const double r13_24 = std::sqrt(s[1] * s[4]);
    const double r14_23 = std::sqrt(s[2] * s[3]);
    return {-r12_34 + r13_24 + r14_23, r12_34 - r13_24 + r14_23, r12_34 + r13_24 - r14_23};
}

// Haar states from ranlux48 uniforms through Box-Muller.
class HaarSampler {
  public:
    explicit HaarSampler(unsigned long seed) : rng_(seed) {}

    Eigen::VectorXcd operator()(int n) {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        Eigen::VectorXcd v(1 << n);
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            const double r = std::sqrt(-2.0 * std::log(1.0 - u(rng_)));
            const double t = 2.0 * M_PI * u(rng_);
            v[i] = Complex(r * std::cos(t), r * std::sin(t));
        }
        return v.normalized();
    }

  private:
    std::ranlux48 rng_;
};

// Expected purity of a Haar reduced state: (dA + dB) / (dA dB + 1).
inline double haar_mean_purity(int da, int db) { return double(da + db) / double(da * db + 1); }

}  // namespace oracle
