#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "cubering/complex.hpp"

namespace cubering {

/// Betti numbers over Z/2 for dimensions 0..3.
struct BettiNumbers {
  std::array<std::size_t, kMaxDim + 1> values{};

  std::size_t operator[](std::size_t q) const { return values[q]; }
  bool operator==(const BettiNumbers&) const = default;
};

std::ostream& operator<<(std::ostream& os, const BettiNumbers& b);

/// A sparse Z/2 matrix given column by column; each column lists its nonzero
/// row indices (any order, repeats cancel).
using SparseColumns = std::vector<std::vector<std::uint32_t>>;

/// Rank over Z/2. Uses bit-packed dense elimination when both dimensions are
/// below `kDenseRankLimit`, sparse column reduction otherwise.
std::size_t rank_z2(const SparseColumns& columns, std::size_t rows);

inline constexpr std::size_t kDenseRankLimit = 4096;

std::size_t rank_z2_dense(const SparseColumns& columns, std::size_t rows);
std::size_t rank_z2_sparse(const SparseColumns& columns, std::size_t rows);

/// Boundary matrix of dimension q (columns: q-cells, rows: (q-1)-cells),
/// both indexed by ascending id among live cells.
SparseColumns boundary_matrix(const ChainComplex& cx, int q);

/// Betti numbers from ranks of the boundary matrices: b_q = dim ker d_q - rank d_{q+1}.
/// Independent of any AT-model machinery. Throws IntegrityError when d d != 0.
BettiNumbers betti_oracle(const ChainComplex& cx);

}  // namespace cubering
