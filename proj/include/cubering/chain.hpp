#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace cubering {

/// Identifier of a cell inside one complex. Ids are dense and ordered; the
/// order is the canonical tie-break wherever an algorithm must "take a cell".
struct CellId {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const CellId&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, CellId id) {
  return os << '#' << id.value;
}

/// A Z/2 chain: a finite set of cells of one dimension. Addition is
/// symmetric difference; cells are kept sorted so iteration is deterministic.
class Chain {
 public:
  Chain() = default;
  explicit Chain(int dim) : dim_(dim) {}
  Chain(int dim, std::initializer_list<CellId> cells);

  /// Builds a chain from an arbitrary cell list; repeated cells cancel in pairs.
  static Chain from_cells(int dim, std::vector<CellId> cells);

  int dim() const noexcept { return dim_; }
  bool empty() const noexcept { return cells_.empty(); }
  std::size_t size() const noexcept { return cells_.size(); }
  std::span<const CellId> cells() const noexcept { return cells_; }
  auto begin() const noexcept { return cells_.begin(); }
  auto end() const noexcept { return cells_.end(); }
  CellId front() const { return cells_.front(); }
  CellId back() const { return cells_.back(); }

  bool contains(CellId c) const noexcept;

  /// Adds or removes a single cell.
  void toggle(CellId c);

  /// Throws UsageError on dimension mismatch.
  Chain& operator+=(const Chain& other);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }

  bool operator==(const Chain& other) const = default;

 private:
  int dim_ = 0;
  std::vector<CellId> cells_;
};

/// Z/2 scalar product <a, b>: parity of the number of shared cells.
bool scalar_product(const Chain& a, const Chain& b);

/// Symmetric difference of two chains of equal dimension.
Chain chain_add(const Chain& a, const Chain& b);

std::ostream& operator<<(std::ostream& os, const Chain& c);

}  // namespace cubering

template <>
struct std::hash<cubering::CellId> {
  std::size_t operator()(cubering::CellId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
