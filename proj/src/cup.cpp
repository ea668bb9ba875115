#include "cubering/cup.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "cubering/cubical.hpp"
#include "cubering/errors.hpp"

namespace cubering {

bool CupTerms::value() const {
  bool v = false;
  for (auto [a, b] : terms) v ^= (a && b);
  return v;
}

namespace {

struct FaceShape {
  std::vector<CellId> vertices;
  // edge of the face boundary for each vertex pair (a < b)
  std::vector<std::pair<std::pair<CellId, CellId>, CellId>> edges;

  CellId edge(CellId a, CellId b) const {
    for (const auto& [pair, e] : edges) {
      if (pair.first == a && pair.second == b) return e;
    }
    throw UsageError("face has no edge between vertices " + std::to_string(a.value) + " and " +
                     std::to_string(b.value));
  }
};

// Vertex and edge structure read off the boundary, since face reduction can
// rewrite boundaries without touching the stored vertex lists.
FaceShape face_shape(const ChainComplex& cx, CellId face) {
  FaceShape s;
  for (CellId e : cx.boundary(face)) {
    const auto& ends = cx.boundary(e);
    if (ends.size() != 2) throw UsageError("2-cell has a degenerate boundary edge");
    s.edges.push_back({{ends.front(), ends.back()}, e});
    s.vertices.push_back(ends.front());
    s.vertices.push_back(ends.back());
  }
  std::sort(s.vertices.begin(), s.vertices.end());
  s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()), s.vertices.end());
  return s;
}

bool edge_value(const ATModel& m, CellId alpha, CellId edge) { return m.f_of(edge).contains(alpha); }

CupTerms triangle_terms(const ATModel& m, const FaceShape& s, CellId a1, CellId a2) {
  const auto& v = s.vertices;
  return {{{edge_value(m, a1, s.edge(v[0], v[1])), edge_value(m, a2, s.edge(v[1], v[2]))}}};
}

CupTerms square_terms(const ATModel& m, const FaceShape& s, CellId a1, CellId a2) {
  const auto& v = s.vertices;
  return {{{edge_value(m, a1, s.edge(v[0], v[1])), edge_value(m, a2, s.edge(v[1], v[3]))},
           {edge_value(m, a1, s.edge(v[0], v[2])), edge_value(m, a2, s.edge(v[2], v[3]))}}};
}

bool is_triangle(const FaceShape& s) { return s.vertices.size() == 3 && s.edges.size() == 3; }

bool is_p1_square(const FaceShape& s) {
  if (s.vertices.size() != 4 || s.edges.size() != 4) return false;
  auto wanted = p1_edge_pairs(s.vertices);
  std::vector<std::pair<CellId, CellId>> have;
  for (const auto& [pair, e] : s.edges) have.push_back(pair);
  std::sort(have.begin(), have.end());
  std::sort(wanted.begin(), wanted.end());
  return std::equal(have.begin(), have.end(), wanted.begin());
}

enum class Kind { kAny, kSimplicial, kCubical };

void require_h1(const ChainComplex& cx, const ATModel& m, CellId a) {
  if (!m.is_generator(a) || cx.dim(a) != 1) {
    throw UsageError("cup product arguments must be 1-dimensional generators");
  }
}

CupTerms terms_of(const ChainComplex& cx, const ATModel& m, CellId face, CellId a1, CellId a2,
                  Kind kind) {
  if (cx.dim(face) != 2) throw UsageError("cup product is evaluated on 2-cells");
  const FaceShape s = face_shape(cx, face);
  if (kind != Kind::kCubical && is_triangle(s)) return triangle_terms(m, s, a1, a2);
  if (kind != Kind::kSimplicial && is_p1_square(s)) return square_terms(m, s, a1, a2);
  throw UsageError(kind == Kind::kCubical
                       ? "2-cell " + std::to_string(face.value) + " is not a square satisfying P1"
                       : kind == Kind::kSimplicial
                             ? "2-cell " + std::to_string(face.value) + " is not a triangle"
                             : "2-cell " + std::to_string(face.value) +
                                   " is neither a triangle nor a P1 square");
}

Chain cup_impl(const ChainComplex& cx, const ATModel& m, CellId a1, CellId a2, Kind kind) {
  require_h1(cx, m, a1);
  require_h1(cx, m, a2);
  std::vector<CellId> out;
  for (CellId beta : m.generators_of_dim(cx, 2)) {
    bool v = false;
    for (CellId face : m.g_of(beta)) v ^= terms_of(cx, m, face, a1, a2, kind).value();
    if (v) out.push_back(beta);
  }
  return Chain::from_cells(2, std::move(out));
}

}  // namespace

CupTerms cup_terms(const ChainComplex& cx, const ATModel& m, CellId face, CellId a1, CellId a2) {
  return terms_of(cx, m, face, a1, a2, Kind::kAny);
}

Chain cup_simplicial(const ChainComplex& cx, const ATModel& m, CellId a1, CellId a2) {
  return cup_impl(cx, m, a1, a2, Kind::kSimplicial);
}

Chain cup_cubical(const ChainComplex& cx, const ATModel& m, CellId a1, CellId a2) {
  return cup_impl(cx, m, a1, a2, Kind::kCubical);
}

Chain cup_product(const ChainComplex& cx, const ATModel& m, CellId a1, CellId a2) {
  return cup_impl(cx, m, a1, a2, Kind::kAny);
}

std::size_t CupMatrix::nonzero_columns() const {
  std::size_t n = 0;
  for (std::size_t c = 0; c < h2.size(); ++c) {
    for (const auto& row : entries) {
      if (row[c]) {
        ++n;
        break;
      }
    }
  }
  return n;
}

CupMatrix cup_matrix(const ChainComplex& cx, const ATModel& m) {
  CupMatrix out;
  out.h1 = m.generators_of_dim(cx, 1);
  out.h2 = m.generators_of_dim(cx, 2);
  const std::size_t n = out.h1.size();

  // Evaluate every face of every g(beta) once per ordered pair.
  std::vector<std::vector<Chain>> table(n, std::vector<Chain>(n, Chain(2)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i][j] = cup_product(cx, m, out.h1[i], out.h1[j]);
  }

  SparseColumns columns(out.h2.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t row = out.rows.size();
      out.rows.emplace_back(i, j);
      std::vector<std::uint8_t> bits(out.h2.size(), 0);
      for (std::size_t c = 0; c < out.h2.size(); ++c) {
        if (table[i][j].contains(out.h2[c])) {
          bits[c] = 1;
          columns[c].push_back(static_cast<std::uint32_t>(row));
        }
      }
      out.entries.push_back(std::move(bits));
      if (i != j && table[i][j] != table[j][i]) out.asymmetric_pairs.emplace_back(i, j);
    }
  }
  out.rank = rank_z2(columns, out.rows.size());
  return out;
}

std::vector<std::vector<std::uint8_t>> evaluate_on_cycles(const ChainComplex& cx, const ATModel& m,
                                                          const CupMatrix& table, const std::vector<Chain>& cycles) {
  std::vector<std::vector<std::uint8_t>> out;
  for (auto [i, j] : table.rows) {
    std::vector<std::uint8_t> bits;
    for (const Chain& cycle : cycles) {
      bool v = false;
      for (CellId face : cycle) v ^= cup_terms(cx, m, face, table.h1[i], table.h1[j]).value();
      bits.push_back(v ? 1 : 0);
    }
    out.push_back(std::move(bits));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Triangulation

CellId SimplicialComplex::add_vertex() {
  const CellId v = chains_.add_cell(0, Chain(-1));
  index_.emplace(Simplex{v}, v);
  return v;
}

CellId SimplicialComplex::add_simplex(Simplex vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw UsageError("simplex vertices must be distinct");
  }
  if (vertices.empty() || vertices.size() > kMaxDim + 1) throw UsageError("simplex size out of range");
  if (auto found = index_.find(vertices); found != index_.end()) return found->second;
  if (vertices.size() == 1) throw UsageError("unknown vertex");

  std::vector<CellId> facets;
  for (std::size_t skip = 0; skip < vertices.size(); ++skip) {
    Simplex facet;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (i != skip) facet.push_back(vertices[i]);
    }
    facets.push_back(add_simplex(std::move(facet)));
  }
  const int dim = static_cast<int>(vertices.size()) - 1;
  const CellId id = chains_.add_cell(dim, Chain::from_cells(dim - 1, std::move(facets)), vertices);
  index_.emplace(std::move(vertices), id);
  return id;
}

std::optional<CellId> SimplicialComplex::find(Simplex vertices) const {
  std::sort(vertices.begin(), vertices.end());
  auto it = index_.find(vertices);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

// Vertices of a 3-cell, indexed by the bit pattern of their position inside
// the cube; checks that every facet is one of the six coordinate faces.
std::array<CellId, 8> cube_corners(const ChainComplex& q, CellId cube) {
  const auto verts = q.vertices(cube);
  if (verts.size() != 8) throw UsageError("3-cell " + std::to_string(cube.value) + " is not a cube");
  std::array<CellId, 8> corner{};
  std::copy(verts.begin(), verts.end(), corner.begin());

  std::vector<std::vector<CellId>> expected;
  for (unsigned bit : {1u, 2u, 4u}) {
    for (unsigned side : {0u, bit}) {
      std::vector<CellId> face;
      for (unsigned i = 0; i < 8; ++i) {
        if ((i & bit) == side) face.push_back(corner[i]);
      }
      expected.push_back(face);
    }
  }
  std::sort(expected.begin(), expected.end());
  std::vector<std::vector<CellId>> actual;
  for (CellId f : q.boundary(cube)) {
    auto fv = q.vertices(f);
    actual.emplace_back(fv.begin(), fv.end());
  }
  std::sort(actual.begin(), actual.end());
  if (actual != expected) {
    throw UsageError("3-cell " + std::to_string(cube.value) + " is not a combinatorial cube in vertex order");
  }
  return corner;
}

}  // namespace

Triangulation triangulate_kq(const ChainComplex& q) {
  if (!check_P1(q)) throw UsageError("triangulate_kq: complex violates P1");
  Triangulation t;
  t.vertex_of.assign(q.capacity(), CellId{});
  for (CellId v : q.cells(0)) t.vertex_of[v.value] = t.complex.add_vertex();
  auto k = [&](CellId v) { return t.vertex_of[v.value]; };

  for (CellId e : q.cells(1)) {
    const auto& ends = q.boundary(e);
    t.complex.add_simplex({k(ends.front()), k(ends.back())});
  }
  for (CellId sq : q.cells(2)) {
    const auto v = q.vertices(sq);
    t.complex.add_simplex({k(v[0]), k(v[1]), k(v[3])});
    t.complex.add_simplex({k(v[0]), k(v[2]), k(v[3])});
  }
  static constexpr std::array<std::array<unsigned, 3>, 6> kPaths{
      {{1, 2, 4}, {1, 4, 2}, {2, 1, 4}, {2, 4, 1}, {4, 1, 2}, {4, 2, 1}}};
  for (CellId c : q.cells(3)) {
    const auto corner = cube_corners(q, c);
    for (const auto& path : kPaths) {
      t.complex.add_simplex({k(corner[0]), k(corner[path[0]]), k(corner[path[0] | path[1]]), k(corner[7])});
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Equivalence checks

EquivalenceReport equivalence_check_2d(const ChainComplex& q, const ATModel& m, bool verify_each_step) {
  if (q.count(3) != 0) throw UsageError("equivalence_check_2d: complex has 3-cells");
  if (!check_P1(q)) throw UsageError("equivalence_check_2d: complex violates P1");

  EquivalenceReport report;
  ChainComplex k = q;
  ATModel mk = m;
  std::vector<CellId> half_of(q.capacity());
  for (CellId sq : q.cells(2)) {
    const auto v = q.vertices(sq);
    const FaceShape s = face_shape(q, sq);
    Subdivision split{sq, Chain::from_cells(1, {s.edge(v[0], v[1]), s.edge(v[1], v[3])}),
                      Chain::from_cells(1, {s.edge(v[0], v[2]), s.edge(v[2], v[3])})};
    const auto created = subdivide_in_place(k, mk, split);
    half_of[sq.value] = created.alpha1;
    ++report.subdivisions;
    if (verify_each_step && !verify_atmodel(k, mk).ok()) ++report.failed_verifications;
  }

  const auto h1 = m.generators_of_dim(q, 1);
  const auto h2 = m.generators_of_dim(q, 2);
  for (CellId a1 : h1) {
    for (CellId a2 : h1) {
      const Chain cub = cup_cubical(q, m, a1, a2);
      const Chain simp = cup_simplicial(k, mk, a1, a2);
      for (CellId beta : h2) {
        ++report.comparisons;
        const bool x = cub.contains(beta);
        const bool y = simp.contains(half_of[beta.value]);
        if (x != y) report.mismatches.push_back({a1, a2, beta, x, y});
      }
    }
  }
  return report;
}

namespace {

BettiNumbers model_betti(const ChainComplex& cx, const ATModel& m) {
  BettiNumbers b;
  b.values = m.generator_counts(cx);
  return b;
}

}  // namespace

RankReport equivalence_check_rank(const ChainComplex& q) {
  RankReport r;
  const ATModel mq = atmodel_incremental(q);
  r.betti_q = model_betti(q, mq);
  r.rank_q = cup_matrix(q, mq).rank;

  const Triangulation t = triangulate_kq(q);
  const ChainComplex& k = t.complex.chains();
  const ATModel mk = atmodel_incremental(k);
  r.betti_k = model_betti(k, mk);
  r.rank_k = cup_matrix(k, mk).rank;
  r.cells_k = k.size();
  return r;
}

}  // namespace cubering
