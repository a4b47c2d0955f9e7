#include "fracterm/finite_set.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace fracterm {

struct FiniteSet::Cell {
  FiniteSet head;
  std::shared_ptr<const Cell> tail;
  std::uint64_t digest;
  std::size_t length;
};

struct FiniteSet::Node {
  std::shared_ptr<const Cell> list;
  std::size_t rank = 0;
  std::uint64_t digest = 0;
};

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kEmptyList = 0x5eed5eed5eed5eedULL;

}  // namespace

// Three-way structural comparison. Pairs of list cells already known to be
// equal are memoised, which keeps comparisons of independently built von
// Neumann numerals linear instead of exponential.
struct SetComparer {
  using CellPtr = const FiniteSet::Cell*;
  std::set<std::pair<CellPtr, CellPtr>> equal_cells;

  int compare(const FiniteSet& a, const FiniteSet& b) {
    if (a.node_ == b.node_) return 0;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.rank != y.rank) return x.rank < y.rank ? -1 : 1;
    const std::size_t cx = x.list ? x.list->length : 0;
    const std::size_t cy = y.list ? y.list->length : 0;
    if (cx != cy) return cx < cy ? -1 : 1;
    if (x.digest != y.digest) return x.digest < y.digest ? -1 : 1;
    return compare_lists(x.list.get(), y.list.get());
  }

  int compare_lists(CellPtr x, CellPtr y) {
    std::vector<std::pair<CellPtr, CellPtr>> visited;
    int result = 0;
    while (x && y) {
      if (x == y || equal_cells.count({x, y})) break;
      const int c = compare(x->head, y->head);
      if (c != 0) {
        result = c;
        break;
      }
      visited.emplace_back(x, y);
      x = x->tail.get();
      y = y->tail.get();
    }
    if (result == 0 && (x == nullptr) != (y == nullptr)) result = x ? 1 : -1;
    if (result == 0) equal_cells.insert(visited.begin(), visited.end());
    return result;
  }
};

FiniteSet::FiniteSet() {
  auto node = std::make_shared<Node>();
  node->digest = mix(kEmptyList, 0);
  node_ = std::move(node);
}

FiniteSet FiniteSet::from_sorted(const std::vector<FiniteSet>& descending) {
  std::shared_ptr<const Cell> list;
  for (auto it = descending.rbegin(); it != descending.rend(); ++it) {
    const std::uint64_t tail_digest = list ? list->digest : kEmptyList;
    const std::size_t length = list ? list->length + 1 : 1;
    list = std::make_shared<const Cell>(
        Cell{*it, list, mix(it->node_->digest, tail_digest), length});
  }
  auto node = std::make_shared<Node>();
  node->rank = descending.empty() ? 0 : descending.front().rank() + 1;
  node->digest = mix(list ? list->digest : kEmptyList, node->rank);
  node->list = std::move(list);
  return FiniteSet(std::move(node));
}

FiniteSet FiniteSet::of(std::vector<FiniteSet> elements) {
  SetComparer cmp;
  std::sort(elements.begin(), elements.end(),
            [&](const FiniteSet& a, const FiniteSet& b) { return cmp.compare(a, b) > 0; });
  elements.erase(std::unique(elements.begin(), elements.end(),
                             [&](const FiniteSet& a, const FiniteSet& b) {
                               return cmp.compare(a, b) == 0;
                             }),
                 elements.end());
  return from_sorted(elements);
}

FiniteSet FiniteSet::singleton(const FiniteSet& element) { return from_sorted({element}); }

FiniteSet FiniteSet::with_element(const FiniteSet& x) const {
  SetComparer cmp;
  std::vector<FiniteSet> prefix;
  const Cell* cell = node_->list.get();
  while (cell) {
    const int c = cmp.compare(cell->head, x);
    if (c == 0) return *this;
    if (c < 0) break;
    prefix.push_back(cell->head);
    cell = cell->tail.get();
  }
  // Rebuild only the prefix; the remainder of the list is shared.
  std::shared_ptr<const Cell> list;
  if (cell) {
    // Locate the owning shared_ptr for `cell`.
    list = node_->list;
    for (std::size_t i = 0; i < prefix.size(); ++i) list = list->tail;
  }
  auto cons = [](const FiniteSet& head, std::shared_ptr<const Cell> tail) {
    const std::uint64_t tail_digest = tail ? tail->digest : kEmptyList;
    const std::size_t length = tail ? tail->length + 1 : 1;
    return std::make_shared<const Cell>(
        Cell{head, tail, mix(head.node_->digest, tail_digest), length});
  };
  list = cons(x, std::move(list));
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) list = cons(*it, list);

  auto node = std::make_shared<Node>();
  node->rank = list->head.rank() + 1;
  node->digest = mix(list->digest, node->rank);
  node->list = std::move(list);
  return FiniteSet(std::move(node));
}

bool FiniteSet::empty() const noexcept { return node_->list == nullptr; }

std::size_t FiniteSet::cardinality() const noexcept {
  return node_->list ? node_->list->length : 0;
}

std::size_t FiniteSet::rank() const noexcept { return node_->rank; }

const FiniteSet& FiniteSet::greatest() const {
  if (!node_->list) throw std::logic_error("FiniteSet::greatest on the empty set");
  return node_->list->head;
}

std::vector<FiniteSet> FiniteSet::elements() const {
  std::vector<FiniteSet> out;
  for (const Cell* c = node_->list.get(); c; c = c->tail.get()) out.push_back(c->head);
  return out;
}

bool FiniteSet::contains(const FiniteSet& x) const {
  SetComparer cmp;
  for (const Cell* c = node_->list.get(); c; c = c->tail.get()) {
    const int r = cmp.compare(c->head, x);
    if (r == 0) return true;
    if (r < 0) return false;
  }
  return false;
}

bool FiniteSet::is_successor_of_greatest() const {
  if (empty()) return false;
  SetComparer cmp;
  return cmp.compare_lists(node_->list->tail.get(), greatest().node_->list.get()) == 0;
}

bool operator==(const FiniteSet& a, const FiniteSet& b) {
  SetComparer cmp;
  return cmp.compare(a, b) == 0;
}

bool operator<(const FiniteSet& a, const FiniteSet& b) {
  SetComparer cmp;
  return cmp.compare(a, b) < 0;
}

}  // namespace fracterm
