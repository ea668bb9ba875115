#include "cubering/chain.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "cubering/errors.hpp"

namespace cubering {

namespace {

void require_same_dim(const Chain& a, const Chain& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw UsageError(std::string(op) + ": dimension mismatch (" +
                     std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

Chain::Chain(int dim, std::initializer_list<CellId> cells)
    : Chain(from_cells(dim, std::vector<CellId>(cells))) {}

Chain Chain::from_cells(int dim, std::vector<CellId> cells) {
  std::sort(cells.begin(), cells.end());
  Chain out(dim);
  out.cells_.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size();) {
    std::size_t j = i;
    while (j < cells.size() && cells[j] == cells[i]) ++j;
    if ((j - i) % 2 == 1) out.cells_.push_back(cells[i]);
    i = j;
  }
  return out;
}

bool Chain::contains(CellId c) const noexcept {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

void Chain::toggle(CellId c) {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  if (it != cells_.end() && *it == c) {
    cells_.erase(it);
  } else {
    cells_.insert(it, c);
  }
}

Chain& Chain::operator+=(const Chain& other) {
  require_same_dim(*this, other, "chain addition");
  if (other.cells_.empty()) return *this;
  if (cells_.empty()) {
    cells_ = other.cells_;
    return *this;
  }
  if (other.cells_.size() == 1) {
    toggle(other.cells_.front());
    return *this;
  }
  std::vector<CellId> merged;
  merged.reserve(cells_.size() + other.cells_.size());
  std::set_symmetric_difference(cells_.begin(), cells_.end(), other.cells_.begin(),
                                other.cells_.end(), std::back_inserter(merged));
  cells_ = std::move(merged);
  return *this;
}

bool scalar_product(const Chain& a, const Chain& b) {
  require_same_dim(a, b, "scalar product");
  const Chain& small = a.size() <= b.size() ? a : b;
  const Chain& large = a.size() <= b.size() ? b : a;
  bool parity = false;
  if (small.size() * 8 < large.size()) {
    for (CellId c : small) parity ^= large.contains(c);
    return parity;
  }
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      parity = !parity;
      ++i;
      ++j;
    }
  }
  return parity;
}

Chain chain_add(const Chain& a, const Chain& b) { return a + b; }

std::ostream& operator<<(std::ostream& os, const Chain& c) {
  os << "{";
  bool first = true;
  for (CellId id : c) {
    if (!first) os << ' ';
    os << id.value;
    first = false;
  }
  return os << "}_" << c.dim();
}

}  // namespace cubering
