#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cubering/chain.hpp"

namespace cubering {

/// Highest cell dimension handled anywhere in the library.
inline constexpr int kMaxDim = 3;

/// A graded Z/2 chain complex with an explicitly stored boundary per cell.
///
/// Cells are addressed by dense `CellId`s that never get reused: removing a
/// cell only marks it dead, so ids of a sub- or reduced complex stay valid in
/// the complex it came from. Each cell also records the sorted list of its
/// vertex cells; vertex order is the `CellId` order of the vertex cells.
class ChainComplex {
 public:
  /// Appends a cell. Boundary cells must be alive and of dimension `dim - 1`.
  /// When `vertices` is empty it is derived from the boundary.
  CellId add_cell(int dim, Chain boundary, std::vector<CellId> vertices = {});

  /// Appends a cell with a zero boundary, to be filled in with `set_boundary`
  /// once all cells exist. Used when ids must follow an order in which faces
  /// do not precede their cofaces.
  CellId add_placeholder(int dim, std::vector<CellId> vertices);

  void remove_cell(CellId c);
  /// Replaces a boundary. Cells must be live and one dimension lower.
  void set_boundary(CellId c, Chain boundary);

  bool contains(CellId c) const noexcept {
    return c.value < alive_.size() && alive_[c.value];
  }
  int dim(CellId c) const;
  const Chain& boundary(CellId c) const;
  std::span<const CellId> vertices(CellId c) const;

  /// One past the largest id ever handed out.
  std::size_t capacity() const noexcept { return alive_.size(); }
  /// Number of live cells.
  std::size_t size() const noexcept { return live_; }
  std::size_t count(int dim) const;
  std::array<std::size_t, kMaxDim + 1> counts() const;
  int top_dimension() const;

  /// Live cells in ascending id order.
  std::vector<CellId> cells() const;
  std::vector<CellId> cells(int dim) const;
  /// Live cells sorted by (dimension, id).
  std::vector<CellId> cells_by_dimension() const;

  /// Boundary extended by linearity. Throws UsageError on unknown cells.
  Chain boundary_of(const Chain& c) const;

  /// First cell whose boundary-of-boundary is nonzero, if any.
  std::optional<CellId> find_boundary_violation() const;

  /// For every cell, the cells whose boundary contains it.
  std::vector<std::vector<CellId>> coboundaries() const;

 private:
  void require_cell(CellId c) const;

  std::vector<int> dims_;
  std::vector<Chain> boundaries_;
  std::vector<std::vector<CellId>> vertices_;
  std::vector<char> alive_;
  std::size_t live_ = 0;
};

}  // namespace cubering
