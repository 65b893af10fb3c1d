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

#include "geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace tetrafill {

namespace {

using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vertices = std::array<Eigen::Vector3d, 4>;

constexpr double kPrimitiveVolumeTol = 1e-10;

// Pair index of the edge joining vertices a and b (0-based).
int edge_between(int a, int b) {
    int rest[2];
    int n = 0;
    for (int m = 0; m < 4; ++m) {
        if (m != a && m != b) rest[n++] = m;
    }
    return pair_index(rest[0] + 1, rest[1] + 1);
}

// Vertices joined by edge p.
std::array<int, 2> edge_vertices(int p) {
    std::array<int, 2> out{};
    int n = 0;
    for (int m = 0; m < 4; ++m) {
        if (m + 1 != kQubitPairs[p][0] && m + 1 != kQubitPairs[p][1]) out[n++] = m;
    }
    return out;
}

std::array<int, 3> face_vertices(int face) {
    std::array<int, 3> out{};
    int n = 0;
    for (int m = 0; m < 4; ++m) {
        if (m != face) out[n++] = m;
    }
    return out;
}

double triangle_area(const Eigen::Vector3d &a, const Eigen::Vector3d &b, const Eigen::Vector3d &c) {
    return 0.5 * (b - a).cross(c - a).norm();
}

std::optional<Vec6> split_residual(const std::array<double, 6> &edges, const std::array<double, 6> &sigma) {
    const auto verts = place_vertices(edges);
    if (!verts) return std::nullopt;
    const TetraEmbedding e = describe_tetrahedron(*verts);
    Vec6 r;
    for (int p = 0; p < 6; ++p) r[p] = 0.5 * (e.split_areas[2 * p] + e.split_areas[2 * p + 1]) - sigma[p];
    if (!r.allFinite()) return std::nullopt;
    return r;
}

// Damped Newton on the edge lengths with a central-difference Jacobian.
std::optional<std::array<double, 6>> solve_edges(const std::array<double, 6> &sigma, std::array<double, 6> edges) {
    double total = 0.0;
    for (double s : sigma) total += 2.0 * s;
    const double tol = 1e-14 * std::max(total, 1e-300);
    auto r = split_residual(edges, sigma);
    if (!r) return std::nullopt;
    for (int it = 0; it < 100; ++it) {
        if (r->cwiseAbs().maxCoeff() <= tol) return edges;
        const double scale = *std::max_element(edges.begin(), edges.end());
        const double h = 1e-6 * scale;
        Mat6 jac;
        for (int k = 0; k < 6; ++k) {
            auto plus = edges;
            auto minus = edges;
            plus[k] += h;
            minus[k] -= h;
            const auto rp = split_residual(plus, sigma);
            const auto rm = split_residual(minus, sigma);
            if (!rp || !rm) return std::nullopt;
            jac.col(k) = (*rp - *rm) / (2.0 * h);
        }
        const Vec6 step = jac.fullPivLu().solve(-*r);
        if (!step.allFinite()) return std::nullopt;
        bool accepted = false;
        for (double t = 1.0; t >= 1e-8; t *= 0.5) {
            std::array<double, 6> trial{};
            for (int k = 0; k < 6; ++k) trial[k] = edges[k] + t * step[k];
            if (*std::min_element(trial.begin(), trial.end()) <= 0.0) continue;
            const auto rt = split_residual(trial, sigma);
            if (rt && rt->norm() < r->norm()) {
                edges = trial;
                r = rt;
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            // Stalled at roundoff level counts as converged.
            if (r->cwiseAbs().maxCoeff() <= 1e3 * tol) return edges;
            return std::nullopt;
        }
    }
    if (r->cwiseAbs().maxCoeff() <= 1e3 * tol) return edges;
    return std::nullopt;
}

std::array<double, 6> regular_edges(const std::array<double, 6> &sigma) {
    double total = 0.0;
    for (double s : sigma) total += 2.0 * s;
    // A regular tetrahedron of edge a has surface sqrt(3) a^2.
    std::array<double, 6> edges{};
    edges.fill(std::sqrt(total / std::sqrt(3.0)));
    return edges;
}

TetraEmbedding finish(const std::array<double, 6> &edges) {
    const auto verts = place_vertices(edges);
    if (!verts) throw Error(ErrorCode::NonConvergence, "edge solve produced an invalid tetrahedron");
    TetraEmbedding e = describe_tetrahedron(*verts);
    e.edge_lengths = edges;
    return e;
}

TetraEmbedding primitive(const std::array<double, 6> &sigma) {
    TetraEmbedding e;
    const double largest = *std::max_element(sigma.begin(), sigma.end());
    const int nonzero = static_cast<int>(std::count_if(sigma.begin(), sigma.end(), [&](double s) {
        return s > kDegenerateTol;
    }));
    if (largest <= kDegenerateTol) {
        e.kind = ShapeKind::Point;
        e.vertices = {Eigen::Vector3d::Zero()};
    } else if (nonzero == 1) {
        // Only the triangle's area is fixed; use the equilateral one.
        e.kind = ShapeKind::Triangle;
        const double side = std::sqrt(4.0 * largest / std::sqrt(3.0));
        e.vertices = {Eigen::Vector3d::Zero(), Eigen::Vector3d(side, 0.0, 0.0),
                      Eigen::Vector3d(0.5 * side, 0.5 * std::sqrt(3.0) * side, 0.0)};
    } else {
        e.kind = ShapeKind::Segment;
        e.vertices = {Eigen::Vector3d::Zero(), Eigen::Vector3d(1.0, 0.0, 0.0)};
    }
    return e;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return buf;
}

// Outward-wound faces of the canonical tetrahedron (0-based).
std::vector<std::array<int, 3>> outward_faces(const std::vector<Eigen::Vector3d> &v) {
    std::vector<std::array<int, 3>> faces;
    for (int m = 0; m < 4; ++m) {
        auto f = face_vertices(m);
        const Eigen::Vector3d n = (v[f[1]] - v[f[0]]).cross(v[f[2]] - v[f[0]]);
        if (n.dot(v[m] - v[f[0]]) > 0.0) std::swap(f[1], f[2]);
        faces.push_back(f);
    }
    return faces;
}

}  // namespace

std::string_view to_string(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::Tetrahedron: return "tetrahedron";
        case ShapeKind::Triangle: return "triangle";
        case ShapeKind::Segment: return "segment";
        case ShapeKind::Point: return "point";
    }
    return "?";
}

double cayley_menger_volume(const std::array<double, 6> &edge_lengths) {
    Eigen::Matrix<double, 5, 5> cm = Eigen::Matrix<double, 5, 5>::Ones();
    cm(0, 0) = 0.0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const double d = a == b ? 0.0 : edge_lengths[edge_between(a, b)];
            cm(a + 1, b + 1) = d * d;
        }
    }
    return std::sqrt(std::max(cm.determinant() / 288.0, 0.0));
}

std::optional<Vertices> place_vertices(const std::array<double, 6> &edge_lengths) {
    auto d2 = [&](int a, int b) {
        const double d = edge_lengths[edge_between(a, b)];
        return d * d;
    };
    const double d01 = edge_lengths[edge_between(0, 1)];
    if (!(d01 > 0.0)) return std::nullopt;
    const double x2 = (d2(0, 2) - d2(1, 2) + d2(0, 1)) / (2.0 * d01);
    const double y2sq = d2(0, 2) - x2 * x2;
    if (!(y2sq > 0.0)) return std::nullopt;
    const double y2 = std::sqrt(y2sq);
    const double x3 = (d2(0, 3) - d2(1, 3) + d2(0, 1)) / (2.0 * d01);
    const double y3 = (d2(0, 3) - d2(2, 3) + x2 * x2 + y2 * y2 - 2.0 * x2 * x3) / (2.0 * y2);
    const double z3sq = d2(0, 3) - x3 * x3 - y3 * y3;
    if (!(z3sq > 0.0)) return std::nullopt;
    return Vertices{Eigen::Vector3d::Zero(), Eigen::Vector3d(d01, 0.0, 0.0), Eigen::Vector3d(x2, y2, 0.0),
                    Eigen::Vector3d(x3, y3, std::sqrt(z3sq))};
}

TetraEmbedding describe_tetrahedron(const Vertices &v) {
    TetraEmbedding e;
    e.kind = ShapeKind::Tetrahedron;
    e.vertices.assign(v.begin(), v.end());
    for (int p = 0; p < 6; ++p) {
        const auto ends = edge_vertices(p);
        e.edge_lengths[p] = (v[ends[0]] - v[ends[1]]).norm();
    }

    std::array<double, 4> face_area{};
    double surface = 0.0;
    Eigen::Vector3d weighted = Eigen::Vector3d::Zero();
    for (int m = 0; m < 4; ++m) {
        const auto f = face_vertices(m);
        face_area[m] = triangle_area(v[f[0]], v[f[1]], v[f[2]]);
        surface += face_area[m];
        weighted += face_area[m] * v[m];
    }
    e.volume = std::abs((v[1] - v[0]).dot((v[2] - v[0]).cross(v[3] - v[0]))) / 6.0;
    e.incenter = weighted / surface;
    e.inradius = 3.0 * e.volume / surface;

    std::array<int, 6> filled{};
    for (int m = 0; m < 4; ++m) {
        const auto f = face_vertices(m);
        const Eigen::Vector3d n = (v[f[1]] - v[f[0]]).cross(v[f[2]] - v[f[0]]).normalized();
        const Eigen::Vector3d contact = e.incenter - (e.incenter - v[f[0]]).dot(n) * n;
        e.incenter_contacts[m] = contact;
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) {
                const int p = edge_between(f[a], f[b]);
                e.split_areas[2 * p + filled[p]++] = triangle_area(v[f[a]], v[f[b]], contact);
            }
        }
    }
    return e;
}

TetraEmbedding embed_tetrahedron_from(const std::array<double, 6> &sigma, const std::array<double, 6> &start_edges) {
    const auto edges = solve_edges(sigma, start_edges);
    if (!edges) throw Error(ErrorCode::NonConvergence, "edge-length solve did not converge");
    return finish(*edges);
}

TetraEmbedding embed_tetrahedron(const SigmaSolution &solution) {
    std::array<double, 6> sigma = solution.sigma;
    for (double &s : sigma) s = std::max(s, 0.0);
    if (volume(solution).V <= kPrimitiveVolumeTol) return primitive(sigma);

    const auto start = regular_edges(sigma);
    if (auto edges = solve_edges(sigma, start)) return finish(*edges);

    // Continuation from the regular shape with the same surface area.
    const double mean = std::accumulate(sigma.begin(), sigma.end(), 0.0) / 6.0;
    for (int steps : {8, 64}) {
        std::optional<std::array<double, 6>> edges = start;
        for (int s = 1; s <= steps && edges; ++s) {
            const double t = static_cast<double>(s) / steps;
            std::array<double, 6> target{};
            for (int p = 0; p < 6; ++p) target[p] = (1.0 - t) * mean + t * sigma[p];
            edges = solve_edges(target, *edges);
        }
        if (edges) return finish(*edges);
    }
    throw Error(ErrorCode::NonConvergence, "edge-length solve did not converge");
}

MeshFormat parse_mesh_format(std::string_view name) {
    std::string key;
    for (char c : name) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (key == "obj") return MeshFormat::OBJ;
    if (key == "json") return MeshFormat::JSON;
    throw Error(ErrorCode::Unsupported, "unsupported mesh format '" + std::string(name) + "'");
}

std::string export_mesh(const TetraEmbedding &embedding, MeshFormat format, const MeshMetadata &meta) {
    const auto &v = embedding.vertices;
    std::vector<std::array<int, 3>> faces;
    std::vector<std::array<int, 2>> lines;
    std::vector<int> points;
    switch (embedding.kind) {
        case ShapeKind::Tetrahedron: faces = outward_faces(v); break;
        case ShapeKind::Triangle: faces = {{0, 1, 2}}; break;
        case ShapeKind::Segment: lines = {{0, 1}}; break;
        case ShapeKind::Point: points = {0}; break;
    }

    if (format == MeshFormat::OBJ) {
        std::ostringstream out;
        out << "# concurrence tetrahedron (" << to_string(embedding.kind) << ")\n";
        out << "# volume " << format_number(meta.volume) << " f4 " << format_number(meta.f4) << " class "
            << to_string(meta.degeneracy) << "\n";
        for (const auto &p : v) {
            out << "v " << format_number(p.x()) << ' ' << format_number(p.y()) << ' ' << format_number(p.z()) << '\n';
        }
        for (const auto &f : faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
        for (const auto &l : lines) out << "l " << l[0] + 1 << ' ' << l[1] + 1 << '\n';
        for (int p : points) out << "p " << p + 1 << '\n';
        return out.str();
    }

    nlohmann::ordered_json j;
    j["kind"] = to_string(embedding.kind);
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto &p : v) j["vertices"].push_back({p.x(), p.y(), p.z()});
    j["faces"] = faces;
    j["lines"] = lines;
    j["points"] = points;
    j["metadata"] = {{"volume", meta.volume}, {"f4", meta.f4}, {"degeneracy", to_string(meta.degeneracy)}};
    if (embedding.kind == ShapeKind::Tetrahedron) j["metadata"]["edge_lengths"] = embedding.edge_lengths;
    return j.dump(2) + "\n";
}

ObjMesh read_obj(std::string_view text) {
    ObjMesh mesh;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string &why) {
        throw Error(ErrorCode::Parse, "OBJ line " + std::to_string(lineno) + ": " + why);
    };
    auto index = [&](std::istringstream &ls) {
        long k = 0;
        if (!(ls >> k) || k < 1 || k > static_cast<long>(mesh.vertices.size())) fail("bad vertex index");
        return static_cast<int>(k - 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "v") {
            double x = 0, y = 0, z = 0;
            if (!(ls >> x >> y >> z)) fail("bad vertex");
            mesh.vertices.emplace_back(x, y, z);
        } else if (tag == "f") {
            std::array<int, 3> f{};
            for (int &k : f) k = index(ls);
            mesh.faces.push_back(f);
        } else if (tag == "l") {
            std::array<int, 2> l{};
            for (int &k : l) k = index(ls);
            mesh.lines.push_back(l);
        } else if (tag == "p") {
            mesh.points.push_back(index(ls));
        } else {
            fail("unsupported record '" + tag + "'");
        }
    }
    return mesh;
}

}  // namespace tetrafill
