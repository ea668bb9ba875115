#include "doctest.h"

#include <random>

#include "cubering/cubical.hpp"
#include "cubering/homology.hpp"
#include "cubering/shapes.hpp"

using namespace cubering;

TEST_CASE("rank of small matrices") {
  // columns over rows 0..2
  CHECK(rank_z2({{0, 1}, {1, 2}, {0, 2}}, 3) == 2);
  CHECK(rank_z2({{0}, {1}, {2}}, 3) == 3);
  CHECK(rank_z2({{}, {}}, 4) == 0);
  CHECK(rank_z2({{1, 1}}, 2) == 0);  // repeats cancel
  CHECK(rank_z2({}, 0) == 0);
}

TEST_CASE("dense and sparse elimination agree") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 40;
    const std::size_t cols = 1 + rng() % 40;
    SparseColumns m(cols);
    for (auto& col : m) {
      for (std::size_t r = 0; r < rows; ++r) {
        if (rng() % 4 == 0) col.push_back(static_cast<std::uint32_t>(r));
      }
    }
    CHECK(rank_z2_dense(m, rows) == rank_z2_sparse(m, rows));
  }
}

TEST_CASE("betti numbers of known spaces") {
  CHECK(betti_oracle(shapes::abstract_torus().chains()) == BettiNumbers{{1, 2, 1, 0}});

  const CubicalComplex voxel = complex_from_voxels(VoxelSet({{0, 0, 0}}));
  CHECK(betti_oracle(voxel.chains()) == BettiNumbers{{1, 0, 0, 0}});
  const CubicalComplex sphere = boundary_subcomplex(VoxelSet({{0, 0, 0}}));
  CHECK(betti_oracle(sphere.chains()) == BettiNumbers{{1, 0, 1, 0}});

  const CubicalComplex two = complex_from_voxels(VoxelSet({{0, 0, 0}, {3, 0, 0}}));
  CHECK(betti_oracle(two.chains()) == BettiNumbers{{2, 0, 0, 0}});

  const CubicalComplex ring = complex_from_voxels(shapes::solid_torus().foreground());
  CHECK(betti_oracle(ring.chains()) == BettiNumbers{{1, 1, 0, 0}});

  ChainComplex empty;
  CHECK(betti_oracle(empty) == BettiNumbers{});
}

TEST_CASE("boundary matrix columns are cell boundaries") {
  const auto t = shapes::abstract_torus();
  const auto d1 = boundary_matrix(t.chains(), 1);
  CHECK(d1.size() == 18);
  for (const auto& col : d1) CHECK(col.size() == 2);
  const auto d2 = boundary_matrix(t.chains(), 2);
  CHECK(d2.size() == 9);
  for (const auto& col : d2) CHECK(col.size() == 4);
}
