#include "cubering/complex.hpp"

#include <algorithm>
#include <string>

#include "cubering/errors.hpp"

namespace cubering {

CellId ChainComplex::add_cell(int dim, Chain boundary, std::vector<CellId> vertices) {
  if (dim < 0 || dim > kMaxDim) {
    throw UsageError("cell dimension " + std::to_string(dim) + " out of range");
  }
  if (dim == 0) {
    if (!boundary.empty()) throw UsageError("a vertex has an empty boundary");
    boundary = Chain(-1);
  } else if (boundary.dim() != dim - 1) {
    throw UsageError("boundary chain has dimension " + std::to_string(boundary.dim()) +
                     ", expected " + std::to_string(dim - 1));
  }
  for (CellId b : boundary) {
    require_cell(b);
    if (dims_[b.value] != dim - 1) throw UsageError("boundary cell of wrong dimension");
  }

  const CellId id{static_cast<std::uint32_t>(alive_.size())};
  if (dim == 0) {
    vertices = {id};
  } else if (vertices.empty()) {
    for (CellId b : boundary) {
      const auto& bv = vertices_[b.value];
      vertices.insert(vertices.end(), bv.begin(), bv.end());
    }
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  dims_.push_back(dim);
  boundaries_.push_back(std::move(boundary));
  vertices_.push_back(std::move(vertices));
  alive_.push_back(1);
  ++live_;
  return id;
}

CellId ChainComplex::add_placeholder(int dim, std::vector<CellId> vertices) {
  if (dim < 0 || dim > kMaxDim) {
    throw UsageError("cell dimension " + std::to_string(dim) + " out of range");
  }
  const CellId id{static_cast<std::uint32_t>(alive_.size())};
  if (dim == 0) vertices = {id};
  std::sort(vertices.begin(), vertices.end());
  dims_.push_back(dim);
  boundaries_.push_back(Chain(dim - 1));
  vertices_.push_back(std::move(vertices));
  alive_.push_back(1);
  ++live_;
  return id;
}

void ChainComplex::remove_cell(CellId c) {
  require_cell(c);
  alive_[c.value] = 0;
  --live_;
}

void ChainComplex::set_boundary(CellId c, Chain boundary) {
  require_cell(c);
  if (boundary.dim() != dims_[c.value] - 1) {
    throw UsageError("set_boundary: wrong chain dimension");
  }
  for (CellId b : boundary) {
    require_cell(b);
    if (dims_[b.value] != dims_[c.value] - 1) throw UsageError("set_boundary: cell of wrong dimension");
  }
  boundaries_[c.value] = std::move(boundary);
}

int ChainComplex::dim(CellId c) const {
  if (c.value >= dims_.size()) throw UsageError("unknown cell id " + std::to_string(c.value));
  return dims_[c.value];
}

const Chain& ChainComplex::boundary(CellId c) const {
  require_cell(c);
  return boundaries_[c.value];
}

std::span<const CellId> ChainComplex::vertices(CellId c) const {
  if (c.value >= vertices_.size()) throw UsageError("unknown cell id " + std::to_string(c.value));
  return vertices_[c.value];
}

std::size_t ChainComplex::count(int dim) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < alive_.size(); ++i) n += alive_[i] && dims_[i] == dim;
  return n;
}

std::array<std::size_t, kMaxDim + 1> ChainComplex::counts() const {
  std::array<std::size_t, kMaxDim + 1> out{};
  for (std::size_t i = 0; i < alive_.size(); ++i) {
    if (alive_[i]) ++out[static_cast<std::size_t>(dims_[i])];
  }
  return out;
}

int ChainComplex::top_dimension() const {
  int top = -1;
  for (std::size_t i = 0; i < alive_.size(); ++i) {
    if (alive_[i]) top = std::max(top, dims_[i]);
  }
  return top;
}

std::vector<CellId> ChainComplex::cells() const {
  std::vector<CellId> out;
  out.reserve(live_);
  for (std::size_t i = 0; i < alive_.size(); ++i) {
    if (alive_[i]) out.push_back(CellId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

std::vector<CellId> ChainComplex::cells(int dim) const {
  std::vector<CellId> out;
  for (std::size_t i = 0; i < alive_.size(); ++i) {
    if (alive_[i] && dims_[i] == dim) out.push_back(CellId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

std::vector<CellId> ChainComplex::cells_by_dimension() const {
  std::vector<CellId> out;
  out.reserve(live_);
  for (int d = 0; d <= kMaxDim; ++d) {
    auto layer = cells(d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Chain ChainComplex::boundary_of(const Chain& c) const {
  std::vector<CellId> acc;
  for (CellId id : c) {
    require_cell(id);
    if (dims_[id.value] != c.dim()) throw UsageError("chain contains a cell of the wrong dimension");
    const auto& b = boundaries_[id.value];
    acc.insert(acc.end(), b.begin(), b.end());
  }
  return Chain::from_cells(c.dim() - 1, std::move(acc));
}

std::optional<CellId> ChainComplex::find_boundary_violation() const {
  for (std::size_t i = 0; i < alive_.size(); ++i) {
    if (!alive_[i] || dims_[i] < 2) continue;
    if (!boundary_of(boundaries_[i]).empty()) return CellId{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

std::vector<std::vector<CellId>> ChainComplex::coboundaries() const {
  std::vector<std::vector<CellId>> out(alive_.size());
  for (std::size_t i = 0; i < alive_.size(); ++i) {
    if (!alive_[i]) continue;
    for (CellId b : boundaries_[i]) out[b.value].push_back(CellId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

void ChainComplex::require_cell(CellId c) const {
  if (!contains(c)) throw UsageError("cell " + std::to_string(c.value) + " is not in the complex");
}

}  // namespace cubering
