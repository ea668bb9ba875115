#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cubering/at_model.hpp"
#include "cubering/complex.hpp"
#include "cubering/homology.hpp"

namespace cubering {

/// Products appearing in the cochain value of one 2-cell: one pair for a
/// triangle (vi,vj,vk), two for a square (vi,vj,vk,vl). Each pair holds
/// <a1, f(first edge)> and <a2, f(second edge)>.
struct CupTerms {
  std::vector<std::pair<bool, bool>> terms;
  bool value() const;
};

/// Cochain value (a1 f cup a2 f) on one 2-cell. Triangles use the simplicial
/// formula, squares the cubical one; a square must carry its P1 edges.
/// Throws UsageError for any other 2-cell.
CupTerms cup_terms(const ChainComplex& cx, const ATModel& m, CellId face, CellId a1, CellId a2);

/// Sum over beta in H_2 of (a1 f cup a2 f)(g(beta)) beta, for simplicial complexes.
Chain cup_simplicial(const ChainComplex& cx, const ATModel& m, CellId a1, CellId a2);
/// Same for cubical complexes satisfying P1.
Chain cup_cubical(const ChainComplex& cx, const ATModel& m, CellId a1, CellId a2);
/// Dispatches on the shape of each evaluated 2-cell.
Chain cup_product(const ChainComplex& cx, const ATModel& m, CellId a1, CellId a2);

/// Table of all products of 1-generators (pairs i <= j) over the H_2 basis.
struct CupMatrix {
  std::vector<CellId> h1;
  std::vector<CellId> h2;
  /// Index pairs into h1.
  std::vector<std::pair<std::size_t, std::size_t>> rows;
  /// rows.size() x h2.size() bits.
  std::vector<std::vector<std::uint8_t>> entries;
  std::size_t rank = 0;
  /// Pairs (i, j), i < j, with cup(h1[i], h1[j]) != cup(h1[j], h1[i]).
  std::vector<std::pair<std::size_t, std::size_t>> asymmetric_pairs;

  std::size_t nonzero_columns() const;
};

CupMatrix cup_matrix(const ChainComplex& cx, const ATModel& m);

/// Value of each tabulated product (rows of `table`) on each given 2-cycle.
std::vector<std::vector<std::uint8_t>> evaluate_on_cycles(const ChainComplex& cx, const ATModel& m,
                                                          const CupMatrix& table, const std::vector<Chain>& cycles);

/// A simplicial complex stored as a chain complex, with lookup by vertex tuple.
class SimplicialComplex {
 public:
  using Simplex = std::vector<CellId>;

  CellId add_vertex();
  /// Adds the simplex with all of its faces; vertices are sorted first.
  CellId add_simplex(Simplex vertices);
  std::optional<CellId> find(Simplex vertices) const;
  const ChainComplex& chains() const noexcept { return chains_; }

 private:
  ChainComplex chains_;
  std::map<Simplex, CellId> index_;
};

struct Triangulation {
  SimplicialComplex complex;
  /// Indexed by vertex id of Q; the matching vertex of K_Q.
  std::vector<CellId> vertex_of;
};

/// K_Q: every square (vi,vj,vk,vl) splits into (vi,vj,vl) and (vi,vk,vl),
/// every cube into the six tetrahedra spanned by monotone vertex paths from
/// its smallest to its largest vertex. Throws UsageError when a square
/// violates P1 or a 3-cell is not a combinatorial cube.
Triangulation triangulate_kq(const ChainComplex& q);

struct CupMismatch {
  CellId a1;
  CellId a2;
  CellId beta;
  bool cubical;
  bool simplicial;
};

struct EquivalenceReport {
  std::size_t comparisons = 0;
  std::vector<CupMismatch> mismatches;
  /// Axiom checks of the model after each single subdivision.
  std::size_t subdivisions = 0;
  std::size_t failed_verifications = 0;
  bool ok() const { return mismatches.empty() && failed_verifications == 0; }
};

/// Splits every square of a 2-complex along (vi,vl) with the AT-model
/// transfer and compares cubical products on Q with simplicial products on
/// the result, for all pairs of 1-generators and every 2-generator.
/// `verify_each_step` checks the transferred model after every split.
EquivalenceReport equivalence_check_2d(const ChainComplex& q, const ATModel& m,
                                       bool verify_each_step = false);

struct RankReport {
  BettiNumbers betti_q;
  BettiNumbers betti_k;
  std::size_t rank_q = 0;
  std::size_t rank_k = 0;
  std::size_t cells_k = 0;
  bool ok() const { return betti_q == betti_k && rank_q == rank_k; }
};

/// Cup-matrix rank and Betti numbers of Q against those of K_Q, each from
/// its own incremental AT-model.
RankReport equivalence_check_rank(const ChainComplex& q);

}  // namespace cubering
