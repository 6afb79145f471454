#include "mdlct/itemset.hpp"

#include <algorithm>
#include <functional>

#include "mdlct/errors.hpp"

namespace mdlct {

namespace {

void require_strictly_ascending(const std::vector<Item>& items) {
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (items[i - 1] >= items[i]) {
      throw DomainError(items[i - 1] == items[i]
                            ? "duplicate item id " + std::to_string(items[i])
                            : "item ids not ascending");
    }
  }
}

}  // namespace

Itemset::Itemset(std::initializer_list<Item> items) : items_(items) {
  std::sort(items_.begin(), items_.end());
  require_strictly_ascending(items_);
}

Itemset Itemset::from_sorted(std::vector<Item> items) {
  require_strictly_ascending(items);
  Itemset s;
  s.items_ = std::move(items);
  return s;
}

Itemset Itemset::from_unsorted(std::vector<Item> items) {
  std::sort(items.begin(), items.end());
  return from_sorted(std::move(items));
}

bool Itemset::contains(Item item) const {
  return std::binary_search(items_.begin(), items_.end(), item);
}

bool Itemset::subset_of(const Itemset& other) const {
  return std::includes(other.items_.begin(), other.items_.end(),
                       items_.begin(), items_.end());
}

Itemset Itemset::set_union(const Itemset& other) const {
  std::vector<Item> out;
  out.reserve(items_.size() + other.items_.size());
  std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                 other.items_.end(), std::back_inserter(out));
  Itemset s;
  s.items_ = std::move(out);
  return s;
}

Itemset Itemset::set_intersection(const Itemset& other) const {
  std::vector<Item> out;
  std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                        other.items_.end(), std::back_inserter(out));
  Itemset s;
  s.items_ = std::move(out);
  return s;
}

Itemset Itemset::set_difference(const Itemset& other) const {
  std::vector<Item> out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(),
                      other.items_.end(), std::back_inserter(out));
  Itemset s;
  s.items_ = std::move(out);
  return s;
}

std::string Itemset::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(items_[i]);
  }
  return out;
}

std::size_t ItemsetHash::operator()(const Itemset& s) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Item item : s.items()) {
    h ^= item;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace mdlct
