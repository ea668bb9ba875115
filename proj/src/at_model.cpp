#include "cubering/at_model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "cubering/errors.hpp"

namespace cubering {

bool ATModel::is_generator(CellId c) const {
  return std::binary_search(generators.begin(), generators.end(), c);
}

std::vector<CellId> ATModel::generators_of_dim(const ChainComplex& cx, int dim) const {
  std::vector<CellId> out;
  for (CellId h : generators) {
    if (cx.dim(h) == dim) out.push_back(h);
  }
  return out;
}

std::array<std::size_t, kMaxDim + 1> ATModel::generator_counts(const ChainComplex& cx) const {
  std::array<std::size_t, kMaxDim + 1> out{};
  for (CellId h : generators) ++out[static_cast<std::size_t>(cx.dim(h))];
  return out;
}

const Chain& ATModel::g_of(CellId c) const {
  auto it = g.find(c);
  if (it == g.end()) throw UsageError("cell " + std::to_string(c.value) + " is not a generator");
  return it->second;
}

Chain ATModel::apply_f(const Chain& c) const {
  std::vector<CellId> acc;
  for (CellId id : c) {
    const auto& v = f.at(id.value);
    acc.insert(acc.end(), v.begin(), v.end());
  }
  return Chain::from_cells(c.dim(), std::move(acc));
}

Chain ATModel::apply_phi(const Chain& c) const {
  std::vector<CellId> acc;
  for (CellId id : c) {
    const auto& v = phi.at(id.value);
    acc.insert(acc.end(), v.begin(), v.end());
  }
  return Chain::from_cells(c.dim() + 1, std::move(acc));
}

Chain ATModel::apply_g(const Chain& c) const {
  std::vector<CellId> acc;
  for (CellId id : c) {
    const auto& v = g_of(id);
    acc.insert(acc.end(), v.begin(), v.end());
  }
  return Chain::from_cells(c.dim(), std::move(acc));
}

// ---------------------------------------------------------------------------
// Verification

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

namespace {

void fail(AxiomCheck& check, CellId c) {
  if (check.passed) {
    check.passed = false;
    check.first_violation = c;
  }
}

}  // namespace

VerificationReport verify_atmodel(const ChainComplex& cx, const ATModel& m) {
  VerificationReport report;
  AxiomCheck shape{"well-formed", true, std::nullopt};
  AxiomCheck fg{"fg = id", true, std::nullopt};
  AxiomCheck homotopy{"phi d + d phi = id + gf", true, std::nullopt};
  AxiomCheck fd{"f d = 0", true, std::nullopt};
  AxiomCheck dg{"d g = 0", true, std::nullopt};
  AxiomCheck phiphi{"phi phi = 0", true, std::nullopt};
  AxiomCheck fphi{"f phi = 0", true, std::nullopt};
  AxiomCheck phig{"phi g = 0", true, std::nullopt};
  report.generator_property = AxiomCheck{"f(a) = a, a in g(a)", true, std::nullopt};

  const auto cells = cx.cells();
  const bool sized = m.f.size() >= cx.capacity() && m.phi.size() >= cx.capacity();
  if (!sized) {
    shape.passed = false;
    report.checks = {shape, fg, homotopy, fd, dg, phiphi, fphi, phig};
    for (std::size_t i = 1; i < report.checks.size(); ++i) report.checks[i].passed = false;
    report.generator_property.passed = false;
    return report;
  }

  auto in_complex = [&](const Chain& c, int dim) {
    if (c.dim() != dim) return false;
    return std::all_of(c.begin(), c.end(), [&](CellId id) { return cx.contains(id) && cx.dim(id) == dim; });
  };

  for (CellId h : m.generators) {
    if (!cx.contains(h) || !m.g.count(h)) {
      fail(shape, h);
      continue;
    }
    if (!in_complex(m.g.at(h), cx.dim(h))) fail(shape, h);
  }
  if (!std::is_sorted(m.generators.begin(), m.generators.end())) fail(shape, m.generators.front());
  for (CellId c : cells) {
    const auto& fc = m.f[c.value];
    const auto& pc = m.phi[c.value];
    if (fc.dim() != cx.dim(c) || !std::all_of(fc.begin(), fc.end(), [&](CellId h) { return m.is_generator(h); })) {
      fail(shape, c);
    }
    if (!in_complex(pc, cx.dim(c) + 1)) fail(shape, c);
  }
  if (!shape.passed) {
    report.checks = {shape, fg, homotopy, fd, dg, phiphi, fphi, phig};
    for (std::size_t i = 1; i < report.checks.size(); ++i) report.checks[i].passed = false;
    report.generator_property.passed = false;
    return report;
  }

  for (CellId h : m.generators) {
    const int d = cx.dim(h);
    const Chain& gh = m.g.at(h);
    if (m.apply_f(gh) != Chain(d, {h})) fail(fg, h);
    if (!cx.boundary_of(gh).empty()) fail(dg, h);
    if (!m.apply_phi(gh).empty()) fail(phig, h);
    if (m.f[h.value] != Chain(d, {h}) || !gh.contains(h)) fail(report.generator_property, h);
  }

  for (CellId c : cells) {
    const int d = cx.dim(c);
    const Chain& bd = cx.boundary(c);
    const Chain& pc = m.phi[c.value];
    if (d > 0 && !m.apply_f(bd).empty()) fail(fd, c);
    if (!m.apply_phi(pc).empty()) fail(phiphi, c);
    if (!m.apply_f(pc).empty()) fail(fphi, c);

    Chain lhs = d > 0 ? m.apply_phi(bd) : Chain(d);
    if (!pc.empty()) lhs += cx.boundary_of(pc);
    Chain rhs = m.apply_g(m.f[c.value]);
    rhs.toggle(c);
    if (lhs != rhs) fail(homotopy, c);
  }

  report.checks = {shape, fg, homotopy, fd, dg, phiphi, fphi, phig};
  return report;
}

// ---------------------------------------------------------------------------
// Shared incremental machinery

namespace {

/// Mutable AT-model under construction, with a reverse index from each
/// generator to the cells whose f-image may contain it.
class ModelBuilder {
 public:
  explicit ModelBuilder(const ChainComplex& cx) : cx_(cx) {
    const std::size_t n = cx.capacity();
    m_.f.resize(n);
    m_.phi.resize(n);
    in_h_.assign(n, 0);
    holders_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const int d = cx.dim(CellId{static_cast<std::uint32_t>(i)});
      m_.f[i] = Chain(d);
      m_.phi[i] = Chain(d + 1);
    }
  }

  ModelBuilder(const ChainComplex& cx, ATModel seed) : cx_(cx), m_(std::move(seed)) {
    const std::size_t n = cx.capacity();
    const std::size_t old = m_.f.size();
    m_.f.resize(n);
    m_.phi.resize(n);
    for (std::size_t i = old; i < n; ++i) {
      const int d = cx.dim(CellId{static_cast<std::uint32_t>(i)});
      m_.f[i] = Chain(d);
      m_.phi[i] = Chain(d + 1);
    }
    in_h_.assign(n, 0);
    for (CellId h : m_.generators) in_h_[h.value] = 1;
    holders_.resize(n);
  }

  ATModel& model() { return m_; }
  bool in_h(CellId c) const { return in_h_[c.value] != 0; }
  void add_generator(CellId c) { in_h_[c.value] = 1; }

  void set_f(CellId c, Chain value) {
    m_.f[c.value] = std::move(value);
    track(c, m_.f[c.value]);
  }

  /// Registers every live cell in the reverse index (after direct f writes).
  void index_all() {
    for (auto& h : holders_) h.clear();
    for (CellId c : cx_.cells()) track(c, m_.f[c.value]);
  }

  /// Eliminates generator `a`: every cell b with a in f(b) gets
  /// f(b) += x and phi(b) += y, where x = f d(c) and y = c + phi d(c).
  void kill(CellId a, const Chain& x, const Chain& y) {
    auto candidates = std::move(holders_[a.value]);
    holders_[a.value].clear();
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (CellId b : candidates) {
      if (!m_.f[b.value].contains(a)) continue;
      m_.f[b.value] += x;
      m_.phi[b.value] += y;
      track(b, x);
    }
    in_h_[a.value] = 0;
  }

  /// Standard elimination step for a new cell c whose f-boundary is nonzero.
  void eliminate_with(CellId c, CellId a, const Chain& x) {
    Chain y = m_.apply_phi(cx_.boundary(c));
    y.toggle(c);
    kill(a, x, y);
    m_.f[c.value] = Chain(cx_.dim(c));
  }

  /// Collects H and sets g(s) = s + phi d(s).
  ATModel finish() {
    m_.generators.clear();
    m_.g.clear();
    for (CellId c : cx_.cells()) {
      if (!in_h_[c.value]) continue;
      m_.generators.push_back(c);
      Chain gc = cx_.dim(c) > 0 ? m_.apply_phi(cx_.boundary(c)) : Chain(0);
      gc.toggle(c);
      m_.g.emplace(c, std::move(gc));
    }
    return std::move(m_);
  }

  /// Collects H keeping the current g entries of surviving generators.
  ATModel finish_keep_g() {
    m_.generators.clear();
    std::map<CellId, Chain> kept;
    for (CellId c : cx_.cells()) {
      if (!in_h_[c.value]) continue;
      m_.generators.push_back(c);
      auto it = m_.g.find(c);
      if (it != m_.g.end()) kept.emplace(c, it->second);
    }
    m_.g = std::move(kept);
    return std::move(m_);
  }

 private:
  void track(CellId b, const Chain& added) {
    for (CellId h : added) holders_[h.value].push_back(b);
  }

  const ChainComplex& cx_;
  ATModel m_;
  std::vector<char> in_h_;
  std::vector<std::vector<CellId>> holders_;
};

}  // namespace

ATModel atmodel_incremental(const ChainComplex& cx) {
  if (auto bad = cx.find_boundary_violation()) {
    throw IntegrityError("boundary of boundary is nonzero at cell " + std::to_string(bad->value));
  }
  ModelBuilder b(cx);
  for (CellId c : cx.cells_by_dimension()) {
    const int d = cx.dim(c);
    Chain x = d > 0 ? b.model().apply_f(cx.boundary(c)) : Chain(d - 1);
    if (x.empty()) {
      b.add_generator(c);
      b.set_f(c, Chain(d, {c}));
    } else {
      b.eliminate_with(c, x.back(), x);
    }
  }
  return b.finish();
}

// ---------------------------------------------------------------------------
// Boundary complex

SpanningForest spanning_forest(const ChainComplex& cx) {
  SpanningForest forest;
  forest.parent_edge.assign(cx.capacity(), std::nullopt);
  const auto cob = cx.coboundaries();
  std::vector<char> seen(cx.capacity(), 0);
  for (CellId root : cx.cells(0)) {
    if (seen[root.value]) continue;
    seen[root.value] = 1;
    forest.roots.push_back(root);
    std::vector<CellId> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const CellId v = queue[head];
      auto edges = cob[v.value];
      std::sort(edges.begin(), edges.end());
      for (CellId e : edges) {
        for (CellId u : cx.boundary(e)) {
          if (u == v || seen[u.value]) continue;
          seen[u.value] = 1;
          forest.parent_edge[u.value] = e;
          queue.push_back(u);
        }
      }
    }
  }
  return forest;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

CellId other_end(const ChainComplex& cx, CellId edge, CellId v) {
  const auto& bd = cx.boundary(edge);
  return bd.front() == v ? bd.back() : bd.front();
}

/// Checks the forest and returns, per vertex, (root, depth).
std::vector<std::pair<CellId, std::size_t>> validate_forest(const ChainComplex& cx,
                                                            const SpanningForest& forest) {
  const std::size_t n = cx.capacity();
  if (forest.parent_edge.size() < n) throw UsageError("spanning forest does not cover the complex");
  std::vector<char> is_root(n, 0);
  for (CellId r : forest.roots) {
    if (!cx.contains(r) || cx.dim(r) != 0) throw UsageError("forest root is not a vertex of the complex");
    if (forest.parent_edge[r.value]) throw UsageError("forest root has a parent");
    if (is_root[r.value]) throw UsageError("duplicate forest root");
    is_root[r.value] = 1;
  }

  const auto vertices = cx.cells(0);
  for (CellId v : vertices) {
    if (is_root[v.value]) continue;
    const auto& pe = forest.parent_edge[v.value];
    if (!pe) throw UsageError("vertex " + std::to_string(v.value) + " has no parent and is not a root");
    if (!cx.contains(*pe) || cx.dim(*pe) != 1 || !cx.boundary(*pe).contains(v)) {
      throw UsageError("parent edge of vertex " + std::to_string(v.value) + " is not incident to it");
    }
  }

  std::vector<std::pair<CellId, std::size_t>> info(n, {CellId{}, 0});
  std::vector<char> state(n, 0);  // 0 unknown, 1 on stack, 2 done
  for (CellId r : forest.roots) {
    info[r.value] = {r, 0};
    state[r.value] = 2;
  }
  for (CellId v : vertices) {
    std::vector<CellId> path;
    CellId cur = v;
    while (state[cur.value] == 0) {
      state[cur.value] = 1;
      path.push_back(cur);
      cur = other_end(cx, *forest.parent_edge[cur.value], cur);
    }
    if (state[cur.value] == 1) throw UsageError("spanning forest contains a cycle");
    auto [root, depth] = info[cur.value];
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      info[it->value] = {root, ++depth};
      state[it->value] = 2;
    }
  }

  UnionFind uf(n);
  for (CellId e : cx.cells(1)) uf.unite(cx.boundary(e).front().value, cx.boundary(e).back().value);
  std::vector<int> roots_per_component(n, 0);
  for (CellId r : forest.roots) {
    if (++roots_per_component[uf.find(r.value)] > 1) {
      throw UsageError("two forest roots lie in one connected component");
    }
  }
  for (CellId v : vertices) {
    if (uf.find(info[v.value].first.value) != uf.find(v.value)) {
      throw UsageError("tree of vertex " + std::to_string(v.value) + " leaves its component");
    }
  }
  return info;
}

}  // namespace

ATModel atmodel_boundary(const ChainComplex& dq, const SpanningForest& forest) {
  if (dq.count(3) != 0) throw UsageError("atmodel_boundary: the boundary complex has 3-cells");
  if (auto bad = dq.find_boundary_violation()) {
    throw IntegrityError("boundary of boundary is nonzero at cell " + std::to_string(bad->value));
  }
  const auto info = validate_forest(dq, forest);

  ModelBuilder b(dq);
  ATModel& m = b.model();
  const std::size_t n = dq.capacity();
  std::vector<char> used(n, 0);

  // Step 1: f(s) = s everywhere, then contract each tree onto its root.
  for (CellId c : dq.cells()) m.f[c.value] = Chain(dq.dim(c), {c});
  for (CellId r : forest.roots) b.add_generator(r);
  auto vertices = dq.cells(0);
  for (CellId v : vertices) {
    used[v.value] = 1;
    m.f[v.value] = Chain(0, {info[v.value].first});
  }
  std::stable_sort(vertices.begin(), vertices.end(), [&](CellId a, CellId c) {
    return info[a.value].second < info[c.value].second;
  });
  for (CellId v : vertices) {
    const auto& pe = forest.parent_edge[v.value];
    if (!pe) continue;
    const CellId w = other_end(dq, *pe, v);
    Chain path = m.phi[w.value];
    path.toggle(*pe);
    m.phi[v.value] = std::move(path);
    used[pe->value] = 1;
    m.f[pe->value] = Chain(1);
  }

  // Step 2: pair squares with their single unused edge; otherwise an unused
  // edge opens a new 1-class.
  const auto cob = dq.coboundaries();
  std::vector<int> free_count(n, 0);
  std::set<CellId> candidates;
  std::set<CellId> free_edges;
  for (CellId e : dq.cells(1)) {
    if (!used[e.value]) free_edges.insert(e);
  }
  for (CellId sq : dq.cells(2)) {
    for (CellId e : dq.boundary(sq)) free_count[sq.value] += !used[e.value];
    if (free_count[sq.value] == 1) candidates.insert(sq);
  }
  auto use_edge = [&](CellId e) {
    used[e.value] = 1;
    free_edges.erase(e);
    for (CellId sq : cob[e.value]) {
      if (used[sq.value]) continue;
      const int left = --free_count[sq.value];
      if (left == 1) {
        candidates.insert(sq);
      } else {
        candidates.erase(sq);
      }
    }
  };
  while (!free_edges.empty()) {
    if (!candidates.empty()) {
      const CellId c = *candidates.begin();
      candidates.erase(candidates.begin());
      used[c.value] = 1;
      CellId a{};
      for (CellId e : dq.boundary(c)) {
        if (!used[e.value]) a = e;
      }
      Chain rest = dq.boundary(c);
      rest.toggle(a);
      m.f[a.value] = m.apply_f(rest);
      Chain ph = m.apply_phi(rest);
      ph.toggle(c);
      m.phi[a.value] = std::move(ph);
      m.f[c.value] = Chain(2);
      use_edge(a);
    } else {
      const CellId a = *free_edges.begin();
      b.add_generator(a);
      use_edge(a);
    }
  }

  // Step 3: each remaining square either creates a cavity or kills the
  // smallest 1-class in its f-boundary.
  b.index_all();
  for (CellId c : dq.cells(2)) {
    if (used[c.value]) continue;
    used[c.value] = 1;
    Chain x = m.apply_f(dq.boundary(c));
    if (x.empty()) {
      b.add_generator(c);
    } else {
      b.eliminate_with(c, x.front(), x);
    }
  }

  // Step 4
  return b.finish();
}

// ---------------------------------------------------------------------------
// Face reduction and extension

ChainComplex face_reduction(const ChainComplex& q, const ChainComplex& dq) {
  ChainComplex k = q;
  const std::size_t n = k.capacity();
  std::vector<char> interior(n, 0);
  for (CellId c : k.cells()) interior[c.value] = !dq.contains(c);

  std::vector<Chain> cob(n);
  for (std::size_t i = 0; i < n; ++i) cob[i] = Chain(k.dim(CellId{static_cast<std::uint32_t>(i)}) + 1);
  {
    const auto raw = k.coboundaries();
    for (std::size_t i = 0; i < n; ++i) {
      cob[i] = Chain::from_cells(cob[i].dim(), raw[i]);
    }
  }

  auto reduce = [&](CellId s, CellId t) {
    const Chain bs = k.boundary(s);
    const Chain cofaces_t = cob[t.value];
    for (CellId c : cofaces_t) {
      if (c == s) continue;
      Chain nb = k.boundary(c);
      nb += bs;
      for (CellId x : bs) cob[x.value].toggle(c);
      k.set_boundary(c, std::move(nb));
    }
    for (CellId x : k.boundary(t)) cob[x.value].toggle(t);
    for (CellId x : bs) cob[x.value].toggle(s);
    for (CellId tau : cob[s.value]) {
      Chain nb = k.boundary(tau);
      nb.toggle(s);
      k.set_boundary(tau, std::move(nb));
    }
    k.remove_cell(s);
    k.remove_cell(t);
    interior[s.value] = 0;
    interior[t.value] = 0;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    for (int d = kMaxDim; d >= 1; --d) {
      for (CellId s : k.cells(d)) {
        if (!k.contains(s) || !interior[s.value]) continue;
        for (CellId t : k.boundary(s)) {
          if (interior[t.value]) {
            reduce(s, t);
            progress = true;
            break;
          }
        }
      }
    }
  }
  return k;
}

ExtensionResult atmodel_extend(const ATModel& mdq, const ChainComplex& dq, const ChainComplex& k) {
  for (CellId c : dq.cells()) {
    if (!k.contains(c) || k.boundary(c) != dq.boundary(c)) {
      throw UsageError("atmodel_extend: K does not contain dQ unchanged");
    }
  }
  ModelBuilder b(k, mdq);
  ATModel& m = b.model();
  std::vector<CellId> added;
  for (CellId c : k.cells_by_dimension()) {
    if (dq.contains(c)) continue;
    m.f[c.value] = Chain(k.dim(c));
    m.phi[c.value] = Chain(k.dim(c) + 1);
    added.push_back(c);
  }
  b.index_all();
  for (CellId c : added) {
    Chain x = m.apply_f(k.boundary(c));
    if (x.empty()) {
      throw IntegrityError("adding cell " + std::to_string(c.value) +
                           " to the boundary model creates a new homology class");
    }
    b.eliminate_with(c, x.front(), x);
  }

  ExtensionResult result{b.finish_keep_g(), false};
  if (!verify_atmodel(k, result.model).ok()) {
    ATModel& r = result.model;
    for (CellId h : r.generators) {
      Chain gh = k.dim(h) > 0 ? r.apply_phi(k.boundary(h)) : Chain(0);
      gh.toggle(h);
      r.g[h] = std::move(gh);
    }
    result.g_recomputed = true;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Subdivision

SubdivisionCells subdivide_in_place(ChainComplex& p, ATModel& m, const Subdivision& s) {
  const CellId alpha = s.alpha;
  if (!p.contains(alpha)) throw UsageError("subdivide: alpha is not a cell of P");
  const int q = p.dim(alpha);
  if (q < 1) throw UsageError("subdivide: alpha must have dimension at least 1");
  const Chain& A = s.half1;
  const Chain& B = s.half2;
  if (A.dim() != q - 1 || B.dim() != q - 1 || A.empty() || B.empty()) {
    throw UsageError("subdivide: halves must be nonempty (q-1)-chains");
  }
  if (scalar_product(A, B) || A.size() + B.size() != (A + B).size()) {
    throw UsageError("subdivide: halves overlap");
  }
  if (A + B != p.boundary(alpha)) throw UsageError("subdivide: halves do not sum to the boundary of alpha");
  const Chain bd_e = p.boundary_of(A);
  if (bd_e != p.boundary_of(B)) throw UsageError("subdivide: halves have different boundaries");
  for (CellId h : m.generators) {
    if (m.f.at(h.value) != Chain(p.dim(h), {h}) || !m.g_of(h).contains(h)) {
      throw UsageError("subdivide: AT-model lacks f(a) = a and a in g(a) on generators");
    }
  }

  const bool alpha_in_h = m.is_generator(alpha);
  const Chain f_alpha = m.f.at(alpha.value);
  const Chain phi_alpha = m.phi.at(alpha.value);
  const Chain f_A = m.apply_f(A);
  const Chain phi_B = m.apply_phi(B);
  const auto cofaces = [&] {
    std::vector<CellId> out;
    if (q < kMaxDim) {
      for (CellId c : p.cells(q + 1)) {
        if (p.boundary(c).contains(alpha)) out.push_back(c);
      }
    }
    return out;
  }();

  std::vector<CellId> e_vertices;
  if (q - 1 > 0) {
    for (CellId x : bd_e) {
      auto vs = p.vertices(x);
      e_vertices.insert(e_vertices.end(), vs.begin(), vs.end());
    }
  }
  const CellId e = p.add_cell(q - 1, bd_e, e_vertices);
  Chain b1 = A;
  b1.toggle(e);
  Chain b2 = B;
  b2.toggle(e);
  const CellId alpha1 = p.add_cell(q, b1);
  const CellId alpha2 = p.add_cell(q, b2);

  // d'(c) = d(c) + <alpha, d(c)> (alpha + alpha1 + alpha2)
  for (CellId c : cofaces) {
    Chain nb = p.boundary(c);
    nb.toggle(alpha);
    nb.toggle(alpha1);
    nb.toggle(alpha2);
    p.set_boundary(c, std::move(nb));
  }
  p.remove_cell(alpha);

  auto swap_in = [&](Chain& x, bool with_alpha2) {
    if (!x.contains(alpha)) return;
    x.toggle(alpha);
    x.toggle(alpha1);
    if (with_alpha2) x.toggle(alpha2);
  };

  m.f.resize(p.capacity());
  m.phi.resize(p.capacity());
  for (CellId c : p.cells()) {
    if (c == e || c == alpha1 || c == alpha2) continue;
    swap_in(m.f[c.value], false);
    swap_in(m.phi[c.value], true);
  }

  Chain f_alpha1 = f_alpha;
  swap_in(f_alpha1, false);
  m.f[alpha1.value] = std::move(f_alpha1);
  m.f[alpha2.value] = Chain(q);
  m.f[e.value] = f_A;

  m.phi[alpha1.value] = phi_alpha;
  m.phi[alpha2.value] = Chain(q + 1);
  Chain phi_e = phi_B;
  swap_in(phi_e, true);
  phi_e.toggle(alpha2);
  m.phi[e.value] = std::move(phi_e);

  m.f[alpha.value] = Chain(q);
  m.phi[alpha.value] = Chain(q + 1);

  std::map<CellId, Chain> g2;
  for (auto& [h, gh] : m.g) {
    Chain moved = gh;
    swap_in(moved, true);
    g2.emplace(h == alpha ? alpha1 : h, std::move(moved));
  }
  m.g = std::move(g2);
  if (alpha_in_h) {
    std::replace(m.generators.begin(), m.generators.end(), alpha, alpha1);
    std::sort(m.generators.begin(), m.generators.end());
  }
  return {e, alpha1, alpha2};
}

std::pair<ChainComplex, ATModel> subdivide_atmodel(const ChainComplex& p, const ATModel& m,
                                                   const Subdivision& s, SubdivisionCells* created) {
  ChainComplex p2 = p;
  ATModel m2 = m;
  const auto cells = subdivide_in_place(p2, m2, s);
  if (created) *created = cells;
  return {std::move(p2), std::move(m2)};
}

bool cocycle_eval(CellId sigma, const ATModel& m, const ChainComplex& cx, const Chain& c) {
  if (!m.is_generator(sigma)) throw UsageError("cocycle_eval: cell is not a generator");
  if (cx.dim(sigma) != c.dim()) throw UsageError("cocycle_eval: dimension mismatch");
  return m.apply_f(c).contains(sigma);
}

}  // namespace cubering
