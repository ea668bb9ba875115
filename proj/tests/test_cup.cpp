#include "doctest.h"

#include <random>

#include "cubering/cubical.hpp"
#include "cubering/cup.hpp"
#include "cubering/errors.hpp"
#include "cubering/homology.hpp"
#include "cubering/shapes.hpp"

using namespace cubering;

TEST_CASE("torus cup product") {
  const auto t = shapes::abstract_torus();
  const auto& cx = t.chains();
  const ATModel m = atmodel_incremental(cx);
  const CellId b1 = *t.edge(0, 2);
  const CellId b2 = *t.edge(0, 4);
  const CellId c = cx.cells(2).back();

  const CupTerms terms = cup_terms(cx, m, c, b1, b2);
  REQUIRE(terms.terms.size() == 2);
  CHECK(terms.terms[0] == std::pair{true, true});
  CHECK(terms.terms[1] == std::pair{false, false});
  CHECK(terms.value());

  CHECK(cup_cubical(cx, m, b1, b2) == Chain(2, {c}));
  CHECK(cup_product(cx, m, b1, b2) == Chain(2, {c}));
  CHECK(cup_cubical(cx, m, b1, b1).empty());
  CHECK(cup_cubical(cx, m, b2, b2).empty());

  const CupMatrix table = cup_matrix(cx, m);
  CHECK(table.h1 == std::vector<CellId>{b1, b2});
  CHECK(table.h2 == std::vector<CellId>{c});
  CHECK(table.rows.size() == 3);
  CHECK(table.rank == 1);
  CHECK(table.nonzero_columns() == 1);
}

TEST_CASE("cup terms need a square or a triangle") {
  const auto t = shapes::abstract_torus();
  const ATModel m = atmodel_incremental(t.chains());
  const CellId e = *t.edge(0, 2);
  CHECK_THROWS_AS(cup_terms(t.chains(), m, e, e, e), UsageError);
}

TEST_CASE("simplicial complexes close under faces") {
  SimplicialComplex s;
  const CellId a = s.add_vertex();
  const CellId b = s.add_vertex();
  const CellId c = s.add_vertex();
  const CellId tri = s.add_simplex({c, a, b});
  CHECK(s.chains().counts() == std::array<std::size_t, 4>{3, 3, 1, 0});
  CHECK(s.find({a, b, c}) == tri);
  CHECK(s.find({b, a}).has_value());
  CHECK(s.add_simplex({a, b, c}) == tri);
  CHECK_FALSE(s.chains().find_boundary_violation());
}

TEST_CASE("triangulation of one voxel") {
  const CubicalComplex q = complex_from_voxels(VoxelSet({{0, 0, 0}}));
  const Triangulation kq = triangulate_kq(q.chains());
  const auto counts = kq.complex.chains().counts();
  CHECK(counts == std::array<std::size_t, 4>{8, 19, 18, 6});
  const long euler = static_cast<long>(counts[0]) - static_cast<long>(counts[1]) + static_cast<long>(counts[2]) -
                     static_cast<long>(counts[3]);
  CHECK(euler == 1);
  CHECK_FALSE(kq.complex.chains().find_boundary_violation());
  for (CellId v : q.chains().cells(0)) CHECK(kq.complex.chains().contains(kq.vertex_of[v.value]));
}

TEST_CASE("triangulation keeps homology") {
  for (const Picture3D& pic : {shapes::solid_torus(), shapes::box_minus_center(3), shapes::box(2, 2, 1)}) {
    const CubicalComplex q = complex_from_voxels(pic.foreground());
    const Triangulation kq = triangulate_kq(q.chains());
    CHECK(betti_oracle(kq.complex.chains()) == betti_oracle(q.chains()));
  }
  const Triangulation kt = triangulate_kq(shapes::abstract_torus().chains());
  CHECK(kt.complex.chains().counts() == std::array<std::size_t, 4>{9, 27, 18, 0});
  CHECK(betti_oracle(kt.complex.chains()) == BettiNumbers{{1, 2, 1, 0}});
}

TEST_CASE("simplicial product on the triangulated torus") {
  const Triangulation kt = triangulate_kq(shapes::abstract_torus().chains());
  const auto& cx = kt.complex.chains();
  const ATModel m = atmodel_incremental(cx);
  REQUIRE(verify_atmodel(cx, m).ok());
  const auto h1 = m.generators_of_dim(cx, 1);
  REQUIRE(h1.size() == 2);
  CHECK(cup_simplicial(cx, m, h1[0], h1[1]).size() == 1);
  CHECK(cup_matrix(cx, m).rank == 1);
}

TEST_CASE("cubical and simplicial products agree after subdivision") {
  const auto t = shapes::abstract_torus();
  const ATModel m = atmodel_incremental(t.chains());
  const EquivalenceReport rep = equivalence_check_2d(t.chains(), m, true);
  CHECK(rep.ok());
  CHECK(rep.comparisons == 4);
  CHECK(rep.subdivisions == 9);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const auto g = shapes::random_grid_complex(rng, 3, 4, true, 12);
    CHECK(equivalence_check_2d(g.chains(), atmodel_incremental(g.chains())).ok());
  }
}

TEST_CASE("rank comparison against K_Q") {
  for (const Picture3D& pic : {shapes::box(1, 1, 1), shapes::solid_torus(), shapes::box_minus_center(3)}) {
    const CubicalComplex q = complex_from_voxels(pic.foreground());
    const RankReport rep = equivalence_check_rank(q.chains());
    CHECK(rep.ok());
    CHECK(rep.rank_q == 0);
    CHECK(rep.cells_k > q.size());
  }
  const RankReport torus = equivalence_check_rank(shapes::abstract_torus().chains());
  CHECK(torus.ok());
  CHECK(torus.rank_q == 1);
}

TEST_CASE("products evaluated on chosen cycles") {
  const auto t = shapes::abstract_torus();
  const auto& cx = t.chains();
  const ATModel m = atmodel_incremental(cx);
  const CupMatrix table = cup_matrix(cx, m);
  const Chain everything = Chain::from_cells(2, cx.cells(2));
  const auto bits = evaluate_on_cycles(cx, m, table, {everything, Chain(2)});
  REQUIRE(bits.size() == table.rows.size());
  for (std::size_t row = 0; row < bits.size(); ++row) {
    CHECK(bits[row][0] == table.entries[row][0]);
    CHECK(bits[row][1] == 0);
  }
}
