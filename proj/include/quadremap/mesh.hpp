// Copyright 2026 The quadremap Authors
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

#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadremap/geom.hpp"

namespace quadremap {

/// Cell C_{i+1/2,j+1/2}, named by its lower-left vertex (1-based).
struct CellIndex {
  int i = 1;
  int j = 1;
  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

enum class EdgeFamily {
  kVertical,    // F_{i,j+1/2}: from P_{i,j} to P_{i,j+1}
  kHorizontal,  // F_{i+1/2,j}: from P_{i,j} to P_{i+1,j}
};

struct EdgeIndex {
  EdgeFamily family = EdgeFamily::kVertical;
  int i = 1;
  int j = 1;
  friend auto operator<=>(const EdgeIndex&, const EdgeIndex&) = default;
};

std::string to_string(const CellIndex& c);
std::string to_string(const EdgeIndex& e);

class StructuredQuadMesh {
 public:
  /// Validates dimensions, finiteness and cell simplicity.
  StructuredQuadMesh(int M, int N, std::vector<Point2> vertices);

  int M() const { return M_; }
  int N() const { return N_; }
  int num_cells() const { return (M_ - 1) * (N_ - 1); }

  const Point2& vertex(int i, int j) const { return vertices_[offset(i, j)]; }
  const std::vector<Point2>& vertices() const { return vertices_; }

  bool has_cell(CellIndex c) const { return c.i >= 1 && c.i < M_ && c.j >= 1 && c.j < N_; }
  bool has_edge(const EdgeIndex& e) const;
  bool is_boundary_vertex(int i, int j) const { return i == 1 || j == 1 || i == M_ || j == N_; }
  bool is_boundary_edge(const EdgeIndex& e) const;

  /// Counterclockwise loop P_{i,j} P_{i+1,j} P_{i+1,j+1} P_{i,j+1}.
  std::array<Point2, 4> cell(CellIndex c) const;
  double cell_area(CellIndex c) const;
  Segment edge(const EdgeIndex& e) const;

  /// Row-major position of a cell, i fastest.
  int cell_offset(CellIndex c) const { return (c.j - 1) * (M_ - 1) + (c.i - 1); }
  CellIndex cell_at(int offset) const { return {offset % (M_ - 1) + 1, offset / (M_ - 1) + 1}; }

  /// Logical transpose with x and y exchanged: vertex'(i,j) = swap(vertex(j,i)).
  /// Cells stay counterclockwise; cell (i,j) maps to (j,i).
  StructuredQuadMesh transposed() const;

 private:
  std::size_t offset(int i, int j) const {
    return static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(M_) +
           static_cast<std::size_t>(i - 1);
  }

  int M_;
  int N_;
  std::vector<Point2> vertices_;
};

StructuredQuadMesh build_mesh(int M, int N, std::vector<Point2> points);

/// Text format: "M N" then M*N lines "x y", row-major with i fastest.
void write_mesh(std::ostream& os, const StructuredQuadMesh& mesh);
StructuredQuadMesh read_mesh(std::istream& is);
void write_mesh_file(const std::string& path, const StructuredQuadMesh& mesh);
StructuredQuadMesh read_mesh_file(const std::string& path);

/// Shortest decimal that still round-trips (17 significant digits).
std::string format_real(double v);

struct LocalPatch {
  CellIndex center;
  std::vector<CellIndex> members;
};

LocalPatch local_patch(const StructuredQuadMesh& mesh, CellIndex c);

/// Edges around a center edge. For a vertical center F_{i,j+1/2} the cross
/// members are F_{i-1/2,j}, F_{i+1/2,j}, F_{i-1/2,j+1}, F_{i+1/2,j+1} and the
/// parallel members are F_{i,j-1/2}, F_{i,j+1/2}, F_{i,j+3/2}. Horizontal
/// centers use the transposed layout. Members outside the mesh are dropped.
struct LocalFrame {
  EdgeIndex center;
  std::vector<EdgeIndex> cross;
  std::vector<EdgeIndex> parallel;

  std::size_t size() const { return cross.size() + parallel.size(); }
};

LocalFrame local_frame(const StructuredQuadMesh& mesh, const EdgeIndex& e);

struct CurveViolation {
  EdgeFamily new_family;  // kVertical: x_i^b against y_j^a; kHorizontal: y_j^b against x_i^a
  int i = 0;
  int j = 0;
  int contacts = 0;
  bool collinear = false;
};

struct DegenerateContact {
  EdgeIndex new_edge;
  EdgeIndex old_edge;
  Point2 point;
  bool collinear = false;
};

struct AssumptionReport {
  bool a1 = true;
  bool a2 = true;
  bool a3 = true;
  bool shared_boundary = true;  // false when boundary vertices slide along the boundary
  std::vector<std::pair<int, int>> a1_violations;
  std::vector<CurveViolation> a2_violations;
  std::vector<DegenerateContact> a3_warnings;
  std::vector<std::pair<int, int>> boundary_mismatches;
  int common_interior_edges = 0;

  /// Hypotheses under which the swap-polygon count law applies.
  bool counting_hypotheses() const {
    return a1 && a2 && a3 && shared_boundary && common_interior_edges == 0;
  }
};

AssumptionReport validate_assumptions(const StructuredQuadMesh& old_mesh,
                                      const StructuredQuadMesh& new_mesh);

enum class Quadrant { kLU, kRU, kLD, kRD };

std::string_view quadrant_name(Quadrant q);

/// Cell of the 4-cell patch around P_{i,j} containing q.
/// RU is C_{i+1/2,j+1/2}, LU is C_{i-1/2,j+1/2}, LD is C_{i-1/2,j-1/2} and
/// RD is C_{i+1/2,j-1/2}.
CellIndex quadrant_cell(Quadrant q, int i, int j);

struct VertexAssignment {
  Quadrant quadrant = Quadrant::kRU;
  bool on_boundary = false;
};

VertexAssignment assign_vertex(Point2 q, const StructuredQuadMesh& mesh, int i, int j);

}  // namespace quadremap
