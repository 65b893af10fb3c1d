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

// Explicit tetrahedra from split areas, and mesh export.
//
// Vertex m (0-based) is opposite face m. The edge shared by faces i and j
// joins the two remaining vertices, so edge_lengths and split areas use the
// same pair index as sigma (kQubitPairs order).

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "tetra_solver.hpp"

namespace tetrafill {

enum class ShapeKind { Tetrahedron, Triangle, Segment, Point };

std::string_view to_string(ShapeKind kind);

struct TetraEmbedding {
    ShapeKind kind = ShapeKind::Tetrahedron;
    std::vector<Eigen::Vector3d> vertices;
    /// Meaningful for tetrahedra only below this line.
    std::array<double, 6> edge_lengths{};
    Eigen::Vector3d incenter = Eigen::Vector3d::Zero();
    double inradius = 0.0;
    std::array<Eigen::Vector3d, 4> incenter_contacts{};
    /// split_areas[2p] and split_areas[2p + 1] are the two triangles on edge p.
    std::array<double, 12> split_areas{};
    double volume = 0.0;
};

/// Volume from the six edge lengths (edge p joins the vertices not in pair p).
double cayley_menger_volume(const std::array<double, 6> &edge_lengths);

/// Canonical placement: v1 at the origin, v2 on +x, v3 in the xy plane with
/// y > 0, v4 with z > 0. Empty if the lengths admit no tetrahedron.
std::optional<std::array<Eigen::Vector3d, 4>> place_vertices(const std::array<double, 6> &edge_lengths);

/// Fills incenter, inradius, contacts, split areas and volume from vertices.
TetraEmbedding describe_tetrahedron(const std::array<Eigen::Vector3d, 4> &vertices);

/// Finds the tetrahedron whose split areas equal `solution.sigma`. A zero
/// volume yields the limiting primitive instead: a point when every sigma
/// vanishes, a triangle of area sigma when only one is nonzero, otherwise a
/// unit segment standing in for the unbounded line. Throws NonConvergence if
/// the edge solve fails.
TetraEmbedding embed_tetrahedron(const SigmaSolution &solution);

/// Edge solve from explicit starting edge lengths; used to probe whether
/// different starts land on the same shape.
TetraEmbedding embed_tetrahedron_from(const std::array<double, 6> &sigma, const std::array<double, 6> &start_edges);

enum class MeshFormat { OBJ, JSON };

MeshFormat parse_mesh_format(std::string_view name);

struct MeshMetadata {
    double volume = 0.0;
    double f4 = 0.0;
    DegeneracyClass degeneracy = DegeneracyClass::Generic;
};

/// OBJ uses v/f/l/p records with 9 significant digits; faces are wound
/// outward. JSON carries vertices, 0-based faces, lines, points and metadata.
std::string export_mesh(const TetraEmbedding &embedding, MeshFormat format, const MeshMetadata &meta);

struct ObjMesh {
    std::vector<Eigen::Vector3d> vertices;
    std::vector<std::array<int, 3>> faces;  // 0-based
    std::vector<std::array<int, 2>> lines;
    std::vector<int> points;
};

ObjMesh read_obj(std::string_view text);

}  // namespace tetrafill
