#include "cubering/shapes.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "cubering/errors.hpp"

namespace cubering::shapes {

Picture3D box(int a, int b, int c) {
  Picture3D p(a, b, c);
  for (int z = 0; z < c; ++z) {
    for (int y = 0; y < b; ++y) {
      for (int x = 0; x < a; ++x) p.set({x, y, z});
    }
  }
  return p;
}

Picture3D box_minus_center(int n) {
  if (n < 3 || n % 2 == 0) throw UsageError("box_minus_center needs an odd size of at least 3");
  Picture3D p = box(n, n, n);
  p.set({n / 2, n / 2, n / 2}, false);
  return p;
}

Picture3D solid_torus() {
  Picture3D p = box(3, 3, 1);
  p.set({1, 1, 0}, false);
  return p;
}

namespace {

constexpr int kRingSide = 7;
constexpr int kRingStep = 4;

}  // namespace

void draw_ring(Picture3D& p, int i, int x_offset) {
  for (int u = 0; u < kRingSide; ++u) {
    for (int w = 0; w < kRingSide; ++w) {
      const bool rim = u == 0 || w == 0 || u == kRingSide - 1 || w == kRingSide - 1;
      if (!rim) continue;
      if (i % 2 == 0) {
        p.set({x_offset + u, w, 3});
      } else {
        p.set({x_offset + u, 3, w});
      }
    }
  }
}

Picture3D ring_chain(int n) {
  if (n < 1) throw UsageError("ring_chain needs at least one ring");
  Picture3D p(kRingStep * (n - 1) + kRingSide, kRingSide, kRingSide);
  for (int i = 0; i < n; ++i) draw_ring(p, i, kRingStep * i);
  return p;
}

Picture3D linked_rings() { return ring_chain(2); }

Picture3D unlinked_rings() {
  Picture3D p(2 * kRingSide + 1, kRingSide, kRingSide);
  draw_ring(p, 0, 0);
  draw_ring(p, 1, kRingSide + 1);
  return p;
}

Picture3D random_picture(std::mt19937_64& rng, int n, double fill) {
  Picture3D p(n, n, n);
  std::bernoulli_distribution coin(fill);
  for (int z = 0; z < n; ++z) {
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        if (coin(rng)) p.set({x, y, z});
      }
    }
  }
  return p;
}

AbstractCubicalComplex abstract_torus() {
  AbstractCubicalComplex q(9);
  static constexpr std::array<std::pair<int, int>, 18> kEdges{{
      {0, 1}, {1, 2}, {0, 3}, {3, 4}, {1, 5}, {5, 7}, {2, 6}, {6, 8},
      {0, 2}, {0, 4},
      {3, 5}, {5, 6}, {3, 6}, {4, 7}, {7, 8}, {4, 8}, {1, 7}, {2, 8},
  }};
  for (auto [a, b] : kEdges) q.add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  static constexpr std::array<std::array<std::size_t, 4>, 9> kSquares{{
      {0, 1, 3, 5}, {1, 2, 5, 6}, {0, 2, 3, 6},
      {3, 4, 5, 7}, {5, 6, 7, 8}, {3, 4, 6, 8},
      {0, 1, 4, 7}, {1, 2, 7, 8},
      {0, 2, 4, 8},
  }};
  for (const auto& sq : kSquares) q.add_square(sq);
  return q;
}

namespace {

/// Builds a complex from squares given by lexicographically comparable
/// corner keys; vertices are numbered in key order, edges and squares are
/// inserted in random order.
template <class Key>
AbstractCubicalComplex from_squares(std::mt19937_64& rng, const std::vector<std::array<Key, 4>>& squares) {
  std::set<Key> keys;
  for (const auto& sq : squares) keys.insert(sq.begin(), sq.end());
  std::map<Key, std::size_t> label;
  for (const auto& k : keys) label.emplace(k, label.size());

  std::vector<std::array<std::size_t, 4>> labelled;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& sq : squares) {
    std::array<std::size_t, 4> l{};
    for (int i = 0; i < 4; ++i) l[static_cast<std::size_t>(i)] = label.at(sq[static_cast<std::size_t>(i)]);
    std::sort(l.begin(), l.end());
    edges.insert({l[0], l[1]});
    edges.insert({l[0], l[2]});
    edges.insert({l[1], l[3]});
    edges.insert({l[2], l[3]});
    labelled.push_back(l);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edge_order(edges.begin(), edges.end());
  std::shuffle(edge_order.begin(), edge_order.end(), rng);
  std::shuffle(labelled.begin(), labelled.end(), rng);

  AbstractCubicalComplex q(label.size());
  for (auto [a, b] : edge_order) q.add_edge(a, b);
  for (const auto& l : labelled) q.add_square(l);
  return q;
}

}  // namespace

AbstractCubicalComplex random_grid_complex(std::mt19937_64& rng, int m, int n, bool wrap, std::size_t max_squares,
                                           std::size_t min_squares) {
  if (m < 3 || n < 3) throw UsageError("random_grid_complex needs a grid of at least 3 x 3");
  using Key = std::pair<int, int>;
  std::vector<std::array<Key, 4>> all;
  const int rows = wrap ? m : m - 1;
  const int cols = wrap ? n : n - 1;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int i1 = (i + 1) % m;
      const int j1 = (j + 1) % n;
      all.push_back({Key{i, j}, Key{i1, j}, Key{i, j1}, Key{i1, j1}});
    }
  }
  std::shuffle(all.begin(), all.end(), rng);
  const std::size_t hi = std::min(max_squares, all.size());
  std::uniform_int_distribution<std::size_t> count(std::clamp<std::size_t>(min_squares, 1, hi), hi);
  all.resize(count(rng));
  return from_squares(rng, all);
}

AbstractCubicalComplex random_box_surface(std::mt19937_64& rng, int a, int b, int c, double keep) {
  std::bernoulli_distribution coin(keep);
  std::vector<std::array<Point3, 4>> squares;
  const int size[3] = {a, b, c};
  for (int normal = 0; normal < 3; ++normal) {
    const int u = (normal + 1) % 3;
    const int w = (normal + 2) % 3;
    for (int side : {0, size[normal]}) {
      for (int i = 0; i < size[u]; ++i) {
        for (int j = 0; j < size[w]; ++j) {
          auto corner = [&](int di, int dj) {
            int coord[3];
            coord[normal] = side;
            coord[u] = i + di;
            coord[w] = j + dj;
            return Point3{coord[0], coord[1], coord[2]};
          };
          if (coin(rng)) squares.push_back({corner(0, 0), corner(1, 0), corner(0, 1), corner(1, 1)});
        }
      }
    }
  }
  if (squares.empty()) squares.push_back({Point3{0, 0, 0}, Point3{0, 1, 0}, Point3{1, 0, 0}, Point3{1, 1, 0}});
  return from_squares(rng, squares);
}

}  // namespace cubering::shapes
