#include "cubering/homology.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <string>
#include <unordered_map>

#include "cubering/errors.hpp"

namespace cubering {

std::ostream& operator<<(std::ostream& os, const BettiNumbers& b) {
  return os << '(' << b[0] << ',' << b[1] << ',' << b[2] << ')';
}

std::size_t rank_z2(const SparseColumns& columns, std::size_t rows) {
  if (columns.size() < kDenseRankLimit && rows < kDenseRankLimit) {
    return rank_z2_dense(columns, rows);
  }
  return rank_z2_sparse(columns, rows);
}

std::size_t rank_z2_dense(const SparseColumns& columns, std::size_t rows) {
  const std::size_t words = (rows + 63) / 64;
  // pivot row -> reduced column with that highest set bit
  std::vector<std::vector<std::uint64_t>> basis(rows);
  std::vector<char> has_pivot(rows, 0);
  std::size_t rank = 0;
  std::vector<std::uint64_t> v(words);
  for (const auto& col : columns) {
    std::fill(v.begin(), v.end(), 0);
    for (std::uint32_t r : col) v[r / 64] ^= std::uint64_t{1} << (r % 64);
    std::size_t w = words;
    while (w > 0) {
      if (v[w - 1] == 0) {
        --w;
        continue;
      }
      const std::size_t pivot = (w - 1) * 64 + (63 - std::countl_zero(v[w - 1]));
      if (!has_pivot[pivot]) {
        basis[pivot] = v;
        has_pivot[pivot] = 1;
        ++rank;
        break;
      }
      const auto& b = basis[pivot];
      for (std::size_t k = 0; k < w; ++k) v[k] ^= b[k];
    }
  }
  return rank;
}

std::size_t rank_z2_sparse(const SparseColumns& columns, std::size_t rows) {
  (void)rows;
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> pivots;
  std::size_t rank = 0;
  std::vector<std::uint32_t> scratch;
  for (const auto& raw : columns) {
    std::vector<std::uint32_t> col = raw;
    std::sort(col.begin(), col.end());
    {
      // cancel repeated entries mod 2
      std::vector<std::uint32_t> reduced;
      for (std::size_t i = 0; i < col.size();) {
        std::size_t j = i;
        while (j < col.size() && col[j] == col[i]) ++j;
        if ((j - i) % 2) reduced.push_back(col[i]);
        i = j;
      }
      col.swap(reduced);
    }
    while (!col.empty()) {
      auto it = pivots.find(col.back());
      if (it == pivots.end()) {
        pivots.emplace(col.back(), col);
        ++rank;
        break;
      }
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), it->second.begin(), it->second.end(),
                                    std::back_inserter(scratch));
      col.swap(scratch);
    }
  }
  return rank;
}

SparseColumns boundary_matrix(const ChainComplex& cx, int q) {
  const auto cols = cx.cells(q);
  SparseColumns out(cols.size());
  if (q == 0) return out;
  const auto rows = cx.cells(q - 1);
  std::vector<std::uint32_t> row_index(cx.capacity(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i].value] = static_cast<std::uint32_t>(i);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (CellId b : cx.boundary(cols[j])) out[j].push_back(row_index[b.value]);
  }
  return out;
}

BettiNumbers betti_oracle(const ChainComplex& cx) {
  if (auto bad = cx.find_boundary_violation()) {
    throw IntegrityError("boundary of boundary is nonzero at cell " + std::to_string(bad->value));
  }
  const auto n = cx.counts();
  std::array<std::size_t, kMaxDim + 2> rank{};
  for (int q = 1; q <= kMaxDim; ++q) {
    rank[q] = rank_z2(boundary_matrix(cx, q), n[q - 1]);
  }
  BettiNumbers b;
  for (int q = 0; q <= kMaxDim; ++q) b.values[q] = n[q] - rank[q] - rank[q + 1];
  return b;
}

}  // namespace cubering
