#include "cubering/picture.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <optional>
#include <set>

#include "cubering/errors.hpp"

namespace cubering {

namespace {

constexpr std::size_t kMaxVolume = std::size_t{1} << 28;

}  // namespace

Picture3D::Picture3D(int x, int y, int z) : dims_{x, y, z} {
  if (x <= 0 || y <= 0 || z <= 0) throw UsageError("picture dimensions must be positive");
  const auto volume = static_cast<std::size_t>(x) * static_cast<std::size_t>(y) * static_cast<std::size_t>(z);
  if (volume > kMaxVolume) throw UsageError("picture is too large");
  bits_.assign(volume, 0);
}

bool Picture3D::in_box(const Point3& p) const noexcept {
  return p.x >= 0 && p.y >= 0 && p.z >= 0 && p.x < dims_[0] && p.y < dims_[1] && p.z < dims_[2];
}

std::size_t Picture3D::index(const Point3& p) const noexcept {
  return static_cast<std::size_t>(p.x) +
         static_cast<std::size_t>(dims_[0]) *
             (static_cast<std::size_t>(p.y) + static_cast<std::size_t>(dims_[1]) * static_cast<std::size_t>(p.z));
}

bool Picture3D::get(const Point3& p) const noexcept { return in_box(p) && bits_[index(p)]; }

void Picture3D::set(const Point3& p, bool value) {
  if (!in_box(p)) throw UsageError("voxel outside the picture");
  bits_[index(p)] = value ? 1 : 0;
}

std::size_t Picture3D::foreground_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

VoxelSet Picture3D::foreground() const {
  std::vector<Point3> pts;
  for (int z = 0; z < dims_[2]; ++z) {
    for (int y = 0; y < dims_[1]; ++y) {
      for (int x = 0; x < dims_[0]; ++x) {
        if (get({x, y, z})) pts.push_back({x, y, z});
      }
    }
  }
  return VoxelSet(std::move(pts));
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  std::size_t number = 1;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back({text.substr(start), number});
      break;
    }
    lines.push_back({text.substr(start, end - start), number++});
    start = end + 1;
  }
  return lines;
}

/// Whitespace-separated integers of one line, with their 1-based columns.
std::vector<std::pair<long long, std::size_t>> read_ints(const Line& line, std::size_t skip = 0) {
  std::vector<std::pair<long long, std::size_t>> out;
  std::size_t i = skip;
  const auto s = line.text;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t') {
      ++i;
      continue;
    }
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
    const std::size_t used = static_cast<std::size_t>(ptr - (s.data() + i));
    if (ec != std::errc{} || used == 0 || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t')) {
      throw ParseError("expected an integer", line.number, i + 1);
    }
    out.emplace_back(v, i + 1);
    i += used;
  }
  return out;
}

std::array<int, 3> read_dims(const Line& line, std::size_t skip) {
  const auto ints = read_ints(line, skip);
  if (ints.size() != 3) throw ParseError("header needs three dimensions", line.number, skip + 1);
  std::array<int, 3> dims{};
  std::size_t volume = 1;
  for (int i = 0; i < 3; ++i) {
    const auto [v, col] = ints[static_cast<std::size_t>(i)];
    if (v <= 0 || v > std::numeric_limits<int>::max()) {
      throw ParseError("dimensions must be positive", line.number, col);
    }
    dims[static_cast<std::size_t>(i)] = static_cast<int>(v);
    volume *= static_cast<std::size_t>(v);
    if (volume > kMaxVolume) throw ParseError("picture is too large", line.number, col);
  }
  return dims;
}

Picture3D parse_coordinates(const std::vector<Line>& lines) {
  const auto dims = read_dims(lines[0], 4);
  Picture3D p(dims[0], dims[1], dims[2]);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.text.find_first_not_of(" \t") == std::string_view::npos) continue;
    const auto ints = read_ints(line);
    if (ints.size() != 3) throw ParseError("expected three coordinates", line.number, 1);
    Point3 pt{};
    for (int a = 0; a < 3; ++a) {
      const auto [v, col] = ints[static_cast<std::size_t>(a)];
      if (v < 0 || v >= dims[static_cast<std::size_t>(a)]) {
        throw ParseError("coordinate out of range", line.number, col);
      }
      (a == 0 ? pt.x : a == 1 ? pt.y : pt.z) = static_cast<int>(v);
    }
    if (p.get(pt)) throw ParseError("duplicate voxel", line.number, 1);
    p.set(pt);
  }
  return p;
}

Picture3D parse_grid(const std::vector<Line>& lines) {
  const auto dims = read_dims(lines[0], 0);
  Picture3D p(dims[0], dims[1], dims[2]);
  const auto X = static_cast<std::size_t>(dims[0]);
  int row = 0;
  int block = 0;
  std::size_t i = 1;
  for (; i < lines.size() && block < dims[2]; ++i) {
    const Line& line = lines[i];
    if (row == 0 && block > 0) {
      if (!line.text.empty()) throw ParseError("expected a blank line between blocks", line.number, 1);
      ++i;
      if (i >= lines.size()) break;
    }
    const Line& data = lines[i];
    if (data.text.size() != X) {
      throw ParseError("size mismatch: row has " + std::to_string(data.text.size()) + " cells, expected " +
                           std::to_string(X),
                       data.number, std::min(data.text.size(), X) + 1);
    }
    for (std::size_t x = 0; x < X; ++x) {
      const char c = data.text[x];
      if (c != '0' && c != '1') throw ParseError("illegal character", data.number, x + 1);
      if (c == '1') p.set({static_cast<int>(x), row, block});
    }
    if (++row == dims[1]) {
      row = 0;
      ++block;
    }
  }
  if (block < dims[2]) {
    const std::size_t at = lines.empty() ? 1 : lines.back().number;
    throw ParseError("size mismatch: too few rows", at, 1);
  }
  if (i < lines.size()) {
    throw ParseError("size mismatch: extra content after the last block", lines[i].number, 1);
  }
  return p;
}

}  // namespace

Picture3D parse_picture(std::string_view text) {
  if (text.empty()) throw ParseError("empty input", 1, 1);
  if (text.back() != '\n') {
    const auto lines = split_lines(text);
    throw ParseError("missing trailing newline", lines.back().number, lines.back().text.size() + 1);
  }
  const auto lines = split_lines(text);
  for (const auto& line : lines) {
    if (auto pos = line.text.find('\r'); pos != std::string_view::npos) {
      throw ParseError("illegal character", line.number, pos + 1);
    }
  }
  if (lines[0].text.starts_with("dims")) return parse_coordinates(lines);
  return parse_grid(lines);
}

std::string serialize_picture(const Picture3D& p) {
  std::string out = std::to_string(p.size_x()) + ' ' + std::to_string(p.size_y()) + ' ' +
                    std::to_string(p.size_z()) + '\n';
  out.reserve(out.size() + p.volume() + static_cast<std::size_t>(p.size_y() * p.size_z() * 2));
  for (int z = 0; z < p.size_z(); ++z) {
    if (z > 0) out += '\n';
    for (int y = 0; y < p.size_y(); ++y) {
      for (int x = 0; x < p.size_x(); ++x) out += p.get({x, y, z}) ? '1' : '0';
      out += '\n';
    }
  }
  return out;
}

std::size_t foreground_components(const Picture3D& p) {
  std::vector<char> seen(p.volume(), 0);
  auto idx = [&](const Point3& q) {
    return static_cast<std::size_t>(q.x) +
           static_cast<std::size_t>(p.size_x()) *
               (static_cast<std::size_t>(q.y) + static_cast<std::size_t>(p.size_y()) * static_cast<std::size_t>(q.z));
  };
  std::size_t components = 0;
  std::vector<Point3> stack;
  for (const Point3& start : p.foreground()) {
    if (seen[idx(start)]) continue;
    ++components;
    seen[idx(start)] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const Point3 cur = stack.back();
      stack.pop_back();
      for (int dz = -1; dz <= 1; ++dz) {
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const Point3 n{cur.x + dx, cur.y + dy, cur.z + dz};
            if (!p.get(n) || seen[idx(n)]) continue;
            seen[idx(n)] = 1;
            stack.push_back(n);
          }
        }
      }
    }
  }
  return components;
}

Picture3D complement_picture(const Picture3D& p, int padding, Point3* origin) {
  if (padding < 0) throw UsageError("padding must be nonnegative");
  Point3 lo{0, 0, 0};
  Point3 hi{p.size_x() - 1, p.size_y() - 1, p.size_z() - 1};
  const VoxelSet fg = p.foreground();
  if (!fg.empty()) {
    lo = hi = *fg.begin();
    for (const Point3& q : fg) {
      lo = {std::min(lo.x, q.x), std::min(lo.y, q.y), std::min(lo.z, q.z)};
      hi = {std::max(hi.x, q.x), std::max(hi.y, q.y), std::max(hi.z, q.z)};
    }
  }
  lo = {lo.x - padding, lo.y - padding, lo.z - padding};
  hi = {hi.x + padding, hi.y + padding, hi.z + padding};
  Picture3D out(hi.x - lo.x + 1, hi.y - lo.y + 1, hi.z - lo.z + 1);
  for (int z = 0; z < out.size_z(); ++z) {
    for (int y = 0; y < out.size_y(); ++y) {
      for (int x = 0; x < out.size_x(); ++x) {
        if (!p.get({lo.x + x, lo.y + y, lo.z + z})) out.set({x, y, z});
      }
    }
  }
  if (origin) *origin = lo;
  return out;
}

// ---------------------------------------------------------------------------
// Cycles to voxels

bool is_boundary_voxel(const VoxelSet& b, const Point3& p) {
  if (!b.contains(p)) return false;
  for (int axis = 0; axis < 3; ++axis) {
    if (!b.contains(p.shifted(axis, 1)) || !b.contains(p.shifted(axis, -1))) return true;
  }
  return false;
}

std::vector<std::vector<CellId>> simple_cycles(const ChainComplex& cx, const Chain& cycle) {
  if (cycle.dim() != 1) throw UsageError("simple_cycles expects a 1-chain");
  if (!cx.boundary_of(cycle).empty()) throw UsageError("simple_cycles: chain is not a cycle");
  std::map<CellId, std::vector<CellId>> incident;
  for (CellId e : cycle) {
    for (CellId v : cx.boundary(e)) incident[v].push_back(e);
  }
  std::set<CellId> unused(cycle.begin(), cycle.end());
  auto take_smallest = [&](CellId v) -> std::optional<CellId> {
    for (CellId e : incident[v]) {
      if (unused.count(e)) return e;
    }
    return std::nullopt;
  };
  auto across = [&](CellId e, CellId v) {
    const auto& bd = cx.boundary(e);
    return bd.front() == v ? bd.back() : bd.front();
  };

  std::vector<std::vector<CellId>> loops;
  while (!unused.empty()) {
    const CellId first = *unused.begin();
    std::vector<CellId> path{cx.boundary(first).front()};
    std::vector<CellId> edges;
    std::map<CellId, std::size_t> position{{path[0], 0}};
    unused.erase(first);
    edges.push_back(first);
    CellId cur = across(first, path[0]);
    while (true) {
      if (auto it = position.find(cur); it != position.end()) {
        const std::size_t i = it->second;
        loops.emplace_back(edges.begin() + static_cast<std::ptrdiff_t>(i), edges.end());
        edges.resize(i);
        for (std::size_t k = i + 1; k < path.size(); ++k) position.erase(path[k]);
        path.resize(i + 1);
      } else {
        position.emplace(cur, path.size());
        path.push_back(cur);
      }
      cur = path.back();
      auto next = take_smallest(cur);
      if (!next) break;
      unused.erase(*next);
      edges.push_back(*next);
      cur = across(*next, cur);
    }
  }
  return loops;
}

namespace {

int normal_axis(const ElementaryCube& sq) {
  int n = 0;
  while (sq.extent & axis_bit(n)) ++n;
  return n;
}

/// The voxel of B having the given dQ square as a face.
Point3 square_voxel(const ElementaryCube& sq, const VoxelSet& b) {
  if (b.contains(sq.base)) return sq.base;
  return sq.base.shifted(normal_axis(sq), -1);
}

bool voxel_has_face(const Point3& v, const ElementaryCube& c) {
  for (int axis = 0; axis < 3; ++axis) {
    if (c.extent & axis_bit(axis)) {
      if (v[axis] != c.base[axis]) return false;
    } else if (v[axis] != c.base[axis] && v[axis] != c.base[axis] - 1) {
      return false;
    }
  }
  return true;
}

/// Boundary voxels of B containing the edge, in lexicographic order.
std::vector<Point3> boundary_voxels_of_edge(const ElementaryCube& e, const VoxelSet& b) {
  std::vector<Point3> out;
  for (int dz = -1; dz <= 0; ++dz) {
    for (int dy = -1; dy <= 0; ++dy) {
      for (int dx = -1; dx <= 0; ++dx) {
        const Point3 v{e.base.x + dx, e.base.y + dy, e.base.z + dz};
        if (voxel_has_face(v, e) && is_boundary_voxel(b, v)) out.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Point3> voxel_near(const Point3& v, const ElementaryCube& a, const VoxelSet& b) {
  if (voxel_has_face(v, a) && is_boundary_voxel(b, v)) return v;
  std::vector<Point3> nbrs;
  for (int axis = 0; axis < 3; ++axis) {
    for (int d : {-1, 1}) nbrs.push_back(v.shifted(axis, d));
  }
  std::sort(nbrs.begin(), nbrs.end());
  for (const Point3& w : nbrs) {
    if (voxel_has_face(w, a) && is_boundary_voxel(b, w)) return w;
  }
  return std::nullopt;
}

std::optional<CellId> shared_square(const ChainComplex& dq, const std::vector<std::vector<CellId>>& cob,
                                    CellId a, CellId c) {
  for (CellId sq : cob[a.value]) {
    if (dq.dim(sq) == 2 && dq.boundary(sq).contains(c)) return sq;
  }
  return std::nullopt;
}

std::vector<Point3> loop_voxels(const std::vector<CellId>& loop, const CubicalComplex& dq,
                                const std::vector<std::vector<CellId>>& cob, const VoxelSet& b,
                                bool& fallback) {
  const std::size_t n = loop.size();
  std::vector<std::optional<Point3>> assigned(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (j == i) break;
    if (auto sq = shared_square(dq.chains(), cob, loop[i], loop[j])) {
      const Point3 v = square_voxel(dq.cube(*sq), b);
      if (!assigned[i]) assigned[i] = v;
      if (!assigned[j]) assigned[j] = v;
    }
  }

  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (assigned[i]) continue;
      const ElementaryCube& a = dq.cube(loop[i]);
      for (std::size_t other : {(i + 1) % n, (i + n - 1) % n}) {
        if (!assigned[other]) continue;
        if (auto v = voxel_near(*assigned[other], a, b)) {
          assigned[i] = v;
          progress = true;
          break;
        }
      }
    }
  }

  std::vector<Point3> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!assigned[i]) {
      const auto candidates = boundary_voxels_of_edge(dq.cube(loop[i]), b);
      if (candidates.empty()) throw IntegrityError("edge of a dQ cycle touches no boundary voxel");
      assigned[i] = candidates.front();
      fallback = true;
    }
    if (out.empty() || out.back() != *assigned[i]) out.push_back(*assigned[i]);
  }
  if (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

}  // namespace

std::vector<Cavity> cavities(const Picture3D& p, const CubicalComplex& dq) {
  // Background over the box grown by one, so that everything outside the
  // picture is one component.
  const int X = p.size_x() + 2;
  const int Y = p.size_y() + 2;
  const auto at = [&](const Point3& q) {
    return static_cast<std::size_t>(q.x + 1) +
           static_cast<std::size_t>(X) * (static_cast<std::size_t>(q.y + 1) + static_cast<std::size_t>(Y) * static_cast<std::size_t>(q.z + 1));
  };
  const auto inside = [&](const Point3& q) {
    return q.x >= -1 && q.y >= -1 && q.z >= -1 && q.x <= p.size_x() && q.y <= p.size_y() && q.z <= p.size_z();
  };
  const std::size_t volume = static_cast<std::size_t>(X) * static_cast<std::size_t>(Y) *
                             static_cast<std::size_t>(p.size_z() + 2);
  std::vector<int> label(volume, -1);

  std::vector<Cavity> out;
  std::vector<Point3> stack;
  int next = 0;
  for (int z = -1; z <= p.size_z(); ++z) {
    for (int y = -1; y <= p.size_y(); ++y) {
      for (int x = -1; x <= p.size_x(); ++x) {
        const Point3 start{x, y, z};
        if (p.get(start) || label[at(start)] >= 0) continue;
        const int id = next++;
        std::size_t count = 0;
        label[at(start)] = id;
        stack.push_back(start);
        while (!stack.empty()) {
          const Point3 cur = stack.back();
          stack.pop_back();
          ++count;
          for (int axis = 0; axis < 3; ++axis) {
            for (int d : {-1, 1}) {
              const Point3 n = cur.shifted(axis, d);
              if (!inside(n) || p.get(n) || label[at(n)] >= 0) continue;
              label[at(n)] = id;
              stack.push_back(n);
            }
          }
        }
        // The first component contains the corner outside the picture.
        if (id > 0) out.push_back({start, count, Chain(2)});
      }
    }
  }

  for (CellId sq : dq.chains().cells(2)) {
    const ElementaryCube& c = dq.cube(sq);
    const Point3 upper = c.base;
    const Point3 lower = c.base.shifted(normal_axis(c), -1);
    const Point3 empty = p.get(upper) ? lower : upper;
    if (!inside(empty)) continue;
    const int id = label[at(empty)];
    if (id > 0) out[static_cast<std::size_t>(id - 1)].surface.toggle(sq);
  }
  return out;
}

VoxelCycle cycle_to_voxels(const ATModel& m, CellId sigma, const CubicalComplex& dq, const VoxelSet& b) {
  if (!m.is_generator(sigma)) throw UsageError("cycle_to_voxels: cell is not a generator");
  const auto& cx = dq.chains();
  const Chain& g = m.g_of(sigma);
  for (CellId c : g) {
    if (!cx.contains(c)) throw UsageError("cycle_to_voxels: representative cycle leaves the boundary complex");
  }
  VoxelCycle out;
  out.generator = sigma;
  out.dim = g.dim();
  const auto cob = cx.coboundaries();

  if (out.dim == 0) {
    for (CellId v : g) {
      std::optional<CellId> best;
      for (CellId e : cob[v.value]) {
        for (CellId sq : cob[e.value]) {
          if (!best || sq < *best) best = sq;
        }
      }
      if (!best) throw IntegrityError("boundary vertex lies on no square");
      out.voxels.push_back(square_voxel(dq.cube(*best), b));
    }
  } else if (out.dim == 1) {
    for (const auto& loop : simple_cycles(cx, g)) {
      auto vox = loop_voxels(loop, dq, cob, b, out.fallback_used);
      out.voxels.insert(out.voxels.end(), vox.begin(), vox.end());
      out.loops.push_back(std::move(vox));
    }
  } else if (out.dim == 2) {
    for (CellId sq : g) out.voxels.push_back(square_voxel(dq.cube(sq), b));
  } else {
    throw UsageError("cycle_to_voxels: generators have dimension at most 2");
  }
  std::sort(out.voxels.begin(), out.voxels.end());
  out.voxels.erase(std::unique(out.voxels.begin(), out.voxels.end()), out.voxels.end());
  return out;
}

}  // namespace cubering
