#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubering/complex.hpp"

namespace cubering {

/// Lattice point in Z^3, ordered lexicographically on (x, y, z).
struct Point3 {
  int x = 0;
  int y = 0;
  int z = 0;

  constexpr auto operator<=>(const Point3&) const = default;

  constexpr int operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
  constexpr Point3 shifted(int axis, int delta) const {
    Point3 p = *this;
    (axis == 0 ? p.x : axis == 1 ? p.y : p.z) += delta;
    return p;
  }
};

std::ostream& operator<<(std::ostream& os, const Point3& p);

/// Axis bits of an elementary cube's extent mask.
enum Axis : std::uint8_t { kAxisX = 1, kAxisY = 2, kAxisZ = 4 };

inline constexpr std::uint8_t axis_bit(int axis) { return static_cast<std::uint8_t>(1u << axis); }

/// Unit elementary cube: minimal vertex plus the set of axes it extends along.
struct ElementaryCube {
  Point3 base;
  std::uint8_t extent = 0;

  int dim() const;
  Point3 max_vertex() const;

  /// Canonical order: lexicographic on base, then extent.
  constexpr auto operator<=>(const ElementaryCube&) const = default;
};

std::ostream& operator<<(std::ostream& os, const ElementaryCube& c);
std::string to_string(const ElementaryCube& c);

/// The 2^dim vertices in lexicographic order; first is base, last is the max vertex.
std::vector<Point3> cube_vertices(const ElementaryCube& c);

/// The 2*dim facets: for each extended axis, the lower and the upper face.
/// Empty for a vertex.
std::vector<ElementaryCube> cube_facets(const ElementaryCube& c);

/// The unit 3-cube whose minimal vertex is the given lattice point.
inline ElementaryCube voxel_cube(const Point3& p) { return {p, kAxisX | kAxisY | kAxisZ}; }

struct ElementaryCubeHash {
  std::size_t operator()(const ElementaryCube& c) const noexcept;
};

/// Finite set of lattice points (a picture foreground), kept sorted.
class VoxelSet {
 public:
  VoxelSet() = default;
  explicit VoxelSet(std::vector<Point3> points);

  bool contains(const Point3& p) const;
  bool empty() const noexcept { return points_.empty(); }
  std::size_t size() const noexcept { return points_.size(); }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }
  std::span<const Point3> points() const noexcept { return points_; }

 private:
  std::vector<Point3> points_;
};

/// A chain complex whose cells are elementary cubes. Ids follow the canonical
/// cube order, so vertex ids follow lexicographic vertex order (property P1).
class CubicalComplex {
 public:
  CubicalComplex() = default;

  /// Face closure of the given cubes.
  static CubicalComplex from_cubes(std::span<const ElementaryCube> cubes);

  const ChainComplex& chains() const noexcept { return chains_; }
  const ElementaryCube& cube(CellId c) const { return cubes_.at(c.value); }
  std::optional<CellId> find(const ElementaryCube& c) const;
  bool contains(CellId c) const noexcept { return chains_.contains(c); }
  std::size_t size() const noexcept { return chains_.size(); }

  /// Copy that keeps only the cells accepted by `keep` (must be face-closed);
  /// ids and geometry are preserved.
  template <class Pred>
  CubicalComplex restricted(Pred keep) const {
    CubicalComplex out = *this;
    for (CellId c : chains_.cells()) {
      if (!keep(c)) out.chains_.remove_cell(c);
    }
    return out;
  }

 private:
  ChainComplex chains_;
  std::vector<ElementaryCube> cubes_;
  std::unordered_map<ElementaryCube, CellId, ElementaryCubeHash> index_;
};

/// Q: all voxels of `voxels` with their faces. Throws UsageError when empty.
CubicalComplex complex_from_voxels(const VoxelSet& voxels);

/// dQ: squares of Q shared by a voxel of B and a voxel outside B, with their
/// faces. Cell ids are those of `complex_from_voxels(voxels)`.
CubicalComplex boundary_subcomplex(const VoxelSet& voxels);
CubicalComplex boundary_subcomplex(const CubicalComplex& q, const VoxelSet& voxels);

/// True when every square (2-cell with four vertices) has exactly the four
/// boundary edges demanded by P1 under the id order of its vertices, and
/// every 2-cell is such a square.
bool check_P1(const ChainComplex& cx);

/// The four P1 edges of a square with sorted vertices (vi, vj, vk, vl), as
/// vertex pairs: (vi,vj), (vi,vk), (vj,vl), (vk,vl).
std::array<std::pair<CellId, CellId>, 4> p1_edge_pairs(std::span<const CellId> square_vertices);

/// Cubical complex given combinatorially, with an explicit vertex order.
/// Squares are sorted 4-tuples; by default their boundary is the set of P1
/// edges, so P1 holds by construction.
class AbstractCubicalComplex {
 public:
  explicit AbstractCubicalComplex(std::size_t vertex_count);

  /// Vertex ids are 0..vertex_count-1 in order.
  CellId vertex(std::size_t i) const { return vertices_.at(i); }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }

  CellId add_edge(std::size_t a, std::size_t b);
  /// Adds square (v_i, v_j, v_k, v_l); the labels are sorted first.
  CellId add_square(std::array<std::size_t, 4> labels);
  /// Adds a square with an explicit edge list (P1 is not enforced).
  CellId add_square(std::array<std::size_t, 4> labels, std::span<const CellId> edges);
  /// Adds a 3-cell with an explicit list of facet squares.
  CellId add_cube(std::span<const CellId> facets);

  std::optional<CellId> edge(std::size_t a, std::size_t b) const;
  const ChainComplex& chains() const noexcept { return chains_; }

 private:
  ChainComplex chains_;
  std::vector<CellId> vertices_;
  std::unordered_map<std::uint64_t, CellId> edges_;
};

}  // namespace cubering
