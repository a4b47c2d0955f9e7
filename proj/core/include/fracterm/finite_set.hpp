#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace fracterm {

/// Immutable hereditarily finite set. Elements are kept in a canonical order
/// (descending by rank, cardinality, then structure) in a persistent list, so
/// adding a new greatest element shares the existing list. The von Neumann
/// successor x ∪ {x} is therefore O(1) in memory.
class FiniteSet {
 public:
  /// The empty set.
  FiniteSet();

  /// Builds {e1, ..., en}; duplicates collapse.
  static FiniteSet of(std::vector<FiniteSet> elements);
  static FiniteSet singleton(const FiniteSet& element);

  /// this ∪ {x}.
  FiniteSet with_element(const FiniteSet& x) const;

  bool empty() const noexcept;
  std::size_t cardinality() const noexcept;
  /// 0 for the empty set, else 1 + max rank of the elements.
  std::size_t rank() const noexcept;

  /// Greatest element in canonical order. Requires !empty().
  const FiniteSet& greatest() const;

  /// Elements in descending canonical order.
  std::vector<FiniteSet> elements() const;

  /// Membership: x ∈ this.
  bool contains(const FiniteSet& x) const;

  /// True when the set is exactly {greatest()} ∪ greatest(), i.e. its elements
  /// other than the greatest are the elements of the greatest.
  bool is_successor_of_greatest() const;

  friend bool operator==(const FiniteSet& a, const FiniteSet& b);
  friend bool operator<(const FiniteSet& a, const FiniteSet& b);

 private:
  struct Cell;
  struct Node;
  explicit FiniteSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static FiniteSet from_sorted(const std::vector<FiniteSet>& descending);

  friend struct SetComparer;
  std::shared_ptr<const Node> node_;
};

}  // namespace fracterm
