#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mdlct {

using Item = std::uint32_t;

/// A set of item ids stored strictly ascending. Patterns and transactions
/// share this representation; the empty set is a valid value (it is the
/// identity of set union and a subset of everything).
class Itemset {
 public:
  Itemset() = default;

  /// Sorts and validates; duplicate ids are rejected.
  Itemset(std::initializer_list<Item> items);

  /// Takes a vector that is already strictly ascending (validated).
  static Itemset from_sorted(std::vector<Item> items);

  /// Sorts first; duplicate ids are rejected.
  static Itemset from_unsorted(std::vector<Item> items);

  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const std::vector<Item>& items() const { return items_; }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool contains(Item item) const;
  bool subset_of(const Itemset& other) const;

  Itemset set_union(const Itemset& other) const;
  Itemset set_intersection(const Itemset& other) const;
  Itemset set_difference(const Itemset& other) const;

  /// Space-separated decimal ids, e.g. "1 2 4".
  std::string to_string() const;

  bool operator==(const Itemset&) const = default;
  /// Lexicographic on the ascending id sequence.
  auto operator<=>(const Itemset&) const = default;

 private:
  std::vector<Item> items_;
};

struct ItemsetHash {
  std::size_t operator()(const Itemset& s) const;
};

}  // namespace mdlct
