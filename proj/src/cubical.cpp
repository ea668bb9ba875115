#include "cubering/cubical.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

#include "cubering/errors.hpp"

namespace cubering {

std::ostream& operator<<(std::ostream& os, const Point3& p) {
  return os << '(' << p.x << ',' << p.y << ',' << p.z << ')';
}

int ElementaryCube::dim() const { return std::popcount(static_cast<unsigned>(extent)); }

Point3 ElementaryCube::max_vertex() const {
  return {base.x + ((extent & kAxisX) ? 1 : 0), base.y + ((extent & kAxisY) ? 1 : 0),
          base.z + ((extent & kAxisZ) ? 1 : 0)};
}

std::ostream& operator<<(std::ostream& os, const ElementaryCube& c) {
  os << c.base;
  if (c.extent) {
    os << '[';
    if (c.extent & kAxisX) os << 'x';
    if (c.extent & kAxisY) os << 'y';
    if (c.extent & kAxisZ) os << 'z';
    os << ']';
  }
  return os;
}

std::string to_string(const ElementaryCube& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

std::vector<Point3> cube_vertices(const ElementaryCube& c) {
  std::vector<Point3> out;
  for (unsigned sub = 0; sub < 8; ++sub) {
    if ((sub & ~static_cast<unsigned>(c.extent)) != 0) continue;
    out.push_back({c.base.x + ((sub & kAxisX) ? 1 : 0), c.base.y + ((sub & kAxisY) ? 1 : 0),
                   c.base.z + ((sub & kAxisZ) ? 1 : 0)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementaryCube> cube_facets(const ElementaryCube& c) {
  std::vector<ElementaryCube> out;
  for (int axis = 0; axis < 3; ++axis) {
    const auto bit = axis_bit(axis);
    if (!(c.extent & bit)) continue;
    const auto collapsed = static_cast<std::uint8_t>(c.extent & ~bit);
    out.push_back({c.base, collapsed});
    out.push_back({c.base.shifted(axis, 1), collapsed});
  }
  return out;
}

std::size_t ElementaryCubeHash::operator()(const ElementaryCube& c) const noexcept {
  std::uint64_t h = static_cast<std::uint32_t>(c.base.x);
  h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(c.base.y);
  h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(c.base.z);
  h = h * 0x9E3779B97F4A7C15ull ^ c.extent;
  return static_cast<std::size_t>(h ^ (h >> 29));
}

VoxelSet::VoxelSet(std::vector<Point3> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool VoxelSet::contains(const Point3& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

CubicalComplex CubicalComplex::from_cubes(std::span<const ElementaryCube> cubes) {
  std::unordered_set<ElementaryCube, ElementaryCubeHash> closure;
  std::vector<ElementaryCube> stack(cubes.begin(), cubes.end());
  while (!stack.empty()) {
    ElementaryCube c = stack.back();
    stack.pop_back();
    if (!closure.insert(c).second) continue;
    for (const auto& f : cube_facets(c)) {
      if (!closure.count(f)) stack.push_back(f);
    }
  }

  CubicalComplex out;
  out.cubes_.assign(closure.begin(), closure.end());
  std::sort(out.cubes_.begin(), out.cubes_.end());
  out.index_.reserve(out.cubes_.size());
  for (std::size_t i = 0; i < out.cubes_.size(); ++i) {
    out.index_.emplace(out.cubes_[i], CellId{static_cast<std::uint32_t>(i)});
  }
  for (const auto& c : out.cubes_) {
    std::vector<CellId> verts;
    for (const auto& p : cube_vertices(c)) verts.push_back(out.index_.at({p, 0}));
    out.chains_.add_placeholder(c.dim(), std::move(verts));
  }
  for (std::size_t i = 0; i < out.cubes_.size(); ++i) {
    const auto& c = out.cubes_[i];
    if (c.dim() == 0) continue;
    std::vector<CellId> facets;
    for (const auto& f : cube_facets(c)) facets.push_back(out.index_.at(f));
    out.chains_.set_boundary(CellId{static_cast<std::uint32_t>(i)},
                             Chain::from_cells(c.dim() - 1, std::move(facets)));
  }
  return out;
}

std::optional<CellId> CubicalComplex::find(const ElementaryCube& c) const {
  auto it = index_.find(c);
  if (it == index_.end() || !chains_.contains(it->second)) return std::nullopt;
  return it->second;
}

CubicalComplex complex_from_voxels(const VoxelSet& voxels) {
  if (voxels.empty()) throw UsageError("complex_from_voxels: empty voxel set");
  std::vector<ElementaryCube> cubes;
  cubes.reserve(voxels.size());
  for (const auto& p : voxels) cubes.push_back(voxel_cube(p));
  return CubicalComplex::from_cubes(cubes);
}

namespace {

/// True when the square lies between a voxel of B and a voxel outside B.
bool is_exposed_square(const ElementaryCube& sq, const VoxelSet& voxels) {
  int normal = 0;
  while (sq.extent & axis_bit(normal)) ++normal;
  const bool upper = voxels.contains(sq.base);
  const bool lower = voxels.contains(sq.base.shifted(normal, -1));
  return upper != lower;
}

}  // namespace

CubicalComplex boundary_subcomplex(const CubicalComplex& q, const VoxelSet& voxels) {
  const auto& cx = q.chains();
  std::vector<char> keep(cx.capacity(), 0);
  for (CellId sq : cx.cells(2)) {
    if (!is_exposed_square(q.cube(sq), voxels)) continue;
    keep[sq.value] = 1;
    for (CellId e : cx.boundary(sq)) {
      keep[e.value] = 1;
      for (CellId v : cx.boundary(e)) keep[v.value] = 1;
    }
  }
  return q.restricted([&](CellId c) { return keep[c.value] != 0; });
}

CubicalComplex boundary_subcomplex(const VoxelSet& voxels) {
  if (voxels.empty()) return CubicalComplex{};
  return boundary_subcomplex(complex_from_voxels(voxels), voxels);
}

std::array<std::pair<CellId, CellId>, 4> p1_edge_pairs(std::span<const CellId> v) {
  if (v.size() != 4) throw UsageError("a square has four vertices");
  return {{{v[0], v[1]}, {v[0], v[2]}, {v[1], v[3]}, {v[2], v[3]}}};
}

bool check_P1(const ChainComplex& cx) {
  for (CellId sq : cx.cells(2)) {
    const auto verts = cx.vertices(sq);
    if (verts.size() != 4) return false;
    const auto& bd = cx.boundary(sq);
    if (bd.size() != 4) return false;
    auto wanted = p1_edge_pairs(verts);
    std::vector<std::pair<CellId, CellId>> have;
    for (CellId e : bd) {
      const auto ev = cx.vertices(e);
      if (ev.size() != 2) return false;
      have.emplace_back(ev[0], ev[1]);
    }
    std::sort(have.begin(), have.end());
    std::sort(wanted.begin(), wanted.end());
    if (!std::equal(have.begin(), have.end(), wanted.begin())) return false;
  }
  return true;
}

namespace {

std::uint64_t edge_key(CellId a, CellId b) {
  if (b < a) std::swap(a, b);
  return (std::uint64_t{a.value} << 32) | b.value;
}

}  // namespace

AbstractCubicalComplex::AbstractCubicalComplex(std::size_t vertex_count) {
  for (std::size_t i = 0; i < vertex_count; ++i) vertices_.push_back(chains_.add_cell(0, Chain(-1)));
}

CellId AbstractCubicalComplex::add_edge(std::size_t a, std::size_t b) {
  if (a == b) throw UsageError("edge endpoints must differ");
  const CellId va = vertex(a);
  const CellId vb = vertex(b);
  if (edges_.count(edge_key(va, vb))) throw UsageError("duplicate edge");
  const CellId e = chains_.add_cell(1, Chain(0, {va, vb}));
  edges_.emplace(edge_key(va, vb), e);
  return e;
}

std::optional<CellId> AbstractCubicalComplex::edge(std::size_t a, std::size_t b) const {
  auto it = edges_.find(edge_key(vertex(a), vertex(b)));
  if (it == edges_.end()) return std::nullopt;
  return it->second;
}

CellId AbstractCubicalComplex::add_square(std::array<std::size_t, 4> labels) {
  std::sort(labels.begin(), labels.end());
  const std::array<std::pair<std::size_t, std::size_t>, 4> pairs{
      {{labels[0], labels[1]}, {labels[0], labels[2]}, {labels[1], labels[3]}, {labels[2], labels[3]}}};
  std::vector<CellId> edges;
  for (auto [a, b] : pairs) {
    auto e = edge(a, b);
    if (!e) {
      throw UsageError("square is missing edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    edges.push_back(*e);
  }
  return add_square(labels, edges);
}

CellId AbstractCubicalComplex::add_square(std::array<std::size_t, 4> labels,
                                          std::span<const CellId> edges) {
  std::sort(labels.begin(), labels.end());
  std::vector<CellId> verts;
  for (auto l : labels) verts.push_back(vertex(l));
  return chains_.add_cell(2, Chain::from_cells(1, {edges.begin(), edges.end()}), std::move(verts));
}

CellId AbstractCubicalComplex::add_cube(std::span<const CellId> facets) {
  return chains_.add_cell(3, Chain::from_cells(2, {facets.begin(), facets.end()}));
}

}  // namespace cubering
