#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cubering/at_model.hpp"
#include "cubering/cubical.hpp"

namespace cubering {

/// Binary volume over a box [0,X) x [0,Y) x [0,Z) of Z^3. Foreground voxels
/// are 26-adjacent, background voxels 6-adjacent. The voxel of point p is the
/// unit cube with minimal vertex p.
class Picture3D {
 public:
  Picture3D() = default;
  Picture3D(int x, int y, int z);

  int size_x() const noexcept { return dims_[0]; }
  int size_y() const noexcept { return dims_[1]; }
  int size_z() const noexcept { return dims_[2]; }
  std::size_t volume() const noexcept { return bits_.size(); }

  bool in_box(const Point3& p) const noexcept;
  /// False outside the box.
  bool get(const Point3& p) const noexcept;
  void set(const Point3& p, bool value = true);

  std::size_t foreground_count() const;
  VoxelSet foreground() const;
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  bool operator==(const Picture3D&) const = default;

 private:
  std::size_t index(const Point3& p) const noexcept;

  int dims_[3] = {0, 0, 0};
  std::vector<std::uint8_t> bits_;
};

/// Reads the dense grid form ("X Y Z" then Z blocks of Y rows of X digits,
/// blocks separated by a blank line) or the coordinate form ("dims X Y Z"
/// then one "x y z" line per foreground voxel). Throws ParseError.
Picture3D parse_picture(std::string_view text);
/// Canonical dense grid form.
std::string serialize_picture(const Picture3D& p);

/// Number of 26-connected components of the foreground.
std::size_t foreground_components(const Picture3D& p);

/// Picture over the foreground bounding box grown by `padding` on every side
/// (the whole box when the foreground is empty) whose foreground is the old
/// background. `origin`, when given, receives the new box corner in the old
/// coordinates.
Picture3D complement_picture(const Picture3D& p, int padding, Point3* origin = nullptr);

/// Bounded 6-connected component of the background together with the dQ
/// squares separating it from B; those squares form a 2-cycle enclosing it.
struct Cavity {
  /// First voxel of the component in z, y, x scan order.
  Point3 seed;
  std::size_t voxels = 0;
  Chain surface{2};
};

/// Cavities of the picture in order of their seeds. `dq` must be the
/// boundary complex of the foreground.
std::vector<Cavity> cavities(const Picture3D& p, const CubicalComplex& dq);

/// Voxels of B standing for a homology generator.
struct VoxelCycle {
  CellId generator;
  int dim = 0;
  /// Sorted, without repeats.
  std::vector<Point3> voxels;
  /// For dim 1: voxels of each simple cycle in walk order (may repeat).
  std::vector<std::vector<Point3>> loops;
  /// Set when an edge could only be matched by the last-resort rule.
  bool fallback_used = false;
};

/// True when p is in B and has a 6-neighbour outside B.
bool is_boundary_voxel(const VoxelSet& b, const Point3& p);

/// Projects g(sigma) onto voxels of B. `dq` is the boundary complex of the
/// picture (ids shared with the model's complex); g(sigma) must lie in it.
/// Throws UsageError when sigma is not a generator or g(sigma) leaves dQ.
VoxelCycle cycle_to_voxels(const ATModel& m, CellId sigma, const CubicalComplex& dq, const VoxelSet& b);

/// Splits a 1-cycle into simple cycles: walk from the smallest unused edge,
/// always taking the smallest unused edge at the current vertex, and cut off
/// a loop whenever the walk revisits a vertex. Each loop lists its edges in
/// walk order. Throws UsageError if the chain is not a cycle.
std::vector<std::vector<CellId>> simple_cycles(const ChainComplex& cx, const Chain& cycle);

}  // namespace cubering
