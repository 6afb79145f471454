#include "mdlct/dataset.hpp"

#include <algorithm>

#include "mdlct/errors.hpp"

namespace mdlct {

Dataset::Dataset(std::vector<Itemset> transactions,
                 std::optional<Itemset> alphabet)
    : transactions_(std::move(transactions)) {
  if (alphabet) {
    alphabet_ = std::move(*alphabet);
    for (const auto& t : transactions_) {
      if (!t.subset_of(alphabet_)) {
        throw DomainError("transaction has items outside the given alphabet");
      }
    }
  } else {
    Itemset acc;
    for (const auto& t : transactions_) acc = acc.set_union(t);
    alphabet_ = std::move(acc);
  }
  for (std::uint32_t tid = 0; tid < transactions_.size(); ++tid) {
    for (Item item : transactions_[tid]) index_[item].push_back(tid);
  }
}

std::span<const std::uint32_t> Dataset::tidlist(Item item) const {
  if (!alphabet_.contains(item)) {
    throw DomainError("item " + std::to_string(item) +
                      " is outside the alphabet");
  }
  auto it = index_.find(item);
  if (it == index_.end()) return {};
  return it->second;
}

std::uint64_t Dataset::support(const Itemset& pattern) const {
  return supporting_transactions(pattern).size();
}

std::vector<std::uint32_t> Dataset::supporting_transactions(
    const Itemset& pattern) const {
  if (!pattern.subset_of(alphabet_)) {
    throw DomainError("pattern has items outside the alphabet");
  }
  if (pattern.empty()) {
    std::vector<std::uint32_t> all(transactions_.size());
    for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }
  // Intersect tidlists, smallest first.
  std::vector<std::span<const std::uint32_t>> lists;
  lists.reserve(pattern.size());
  for (Item item : pattern) lists.push_back(tidlist(item));
  std::sort(lists.begin(), lists.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<std::uint32_t> acc(lists.front().begin(), lists.front().end());
  std::vector<std::uint32_t> next;
  for (std::size_t i = 1; i < lists.size() && !acc.empty(); ++i) {
    next.clear();
    std::set_intersection(acc.begin(), acc.end(), lists[i].begin(),
                          lists[i].end(), std::back_inserter(next));
    acc.swap(next);
  }
  return acc;
}

Dataset Dataset::slice(const std::vector<std::uint32_t>& indices) const {
  std::vector<Itemset> txs;
  txs.reserve(indices.size());
  for (auto i : indices) txs.push_back(transactions_.at(i));
  return Dataset(std::move(txs), alphabet_);
}

Dataset Dataset::with_alphabet(Itemset alphabet) const {
  return Dataset(transactions_, std::move(alphabet));
}

LabeledDataset LabeledDataset::over_union_alphabet(
    std::vector<Itemset> benign, std::vector<Itemset> malware) {
  Itemset alpha;
  for (const auto& t : benign) alpha = alpha.set_union(t);
  for (const auto& t : malware) alpha = alpha.set_union(t);
  return LabeledDataset{Dataset(std::move(benign), alpha),
                        Dataset(std::move(malware), alpha)};
}

}  // namespace mdlct
