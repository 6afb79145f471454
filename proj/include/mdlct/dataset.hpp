#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "mdlct/itemset.hpp"

namespace mdlct {

/// A transactional dataset: a multiset of transactions over a fixed item
/// alphabet. Duplicate transactions are stored (and counted) separately and
/// input order is preserved. A per-item inverted index (item -> ascending
/// transaction ids) is built at construction; instances are immutable
/// afterwards and safe to share across threads.
class Dataset {
 public:
  /// If `alphabet` is given it must be a superset of every transaction;
  /// otherwise the alphabet is the union of the transactions' items.
  explicit Dataset(std::vector<Itemset> transactions,
                   std::optional<Itemset> alphabet = std::nullopt);

  /// n — number of transactions (multiset cardinality).
  std::size_t size() const { return transactions_.size(); }
  bool empty() const { return transactions_.empty(); }

  /// m — number of alphabet items.
  std::size_t alphabet_size() const { return alphabet_.size(); }
  const Itemset& alphabet() const { return alphabet_; }

  const std::vector<Itemset>& transactions() const { return transactions_; }
  const Itemset& operator[](std::size_t i) const { return transactions_[i]; }

  /// Ascending ids of the transactions containing `item` (empty when the
  /// item occurs nowhere; the item must still belong to the alphabet).
  std::span<const std::uint32_t> tidlist(Item item) const;

  /// Number of transactions containing `pattern`, counting multiplicity.
  std::uint64_t support(const Itemset& pattern) const;

  /// Ascending ids of the transactions containing `pattern`.
  std::vector<std::uint32_t> supporting_transactions(
      const Itemset& pattern) const;

  /// A new dataset holding the given transactions of this one (indices into
  /// this dataset, in the given order), over the same alphabet.
  Dataset slice(const std::vector<std::uint32_t>& indices) const;

  /// Same transactions over a wider alphabet.
  Dataset with_alphabet(Itemset alphabet) const;

 private:
  std::vector<Itemset> transactions_;
  Itemset alphabet_;
  std::unordered_map<Item, std::vector<std::uint32_t>> index_;
};

/// Two datasets, one per class, sharing one alphabet.
struct LabeledDataset {
  Dataset benign;
  Dataset malware;

  /// Builds both partitions over the union of their alphabets.
  static LabeledDataset over_union_alphabet(std::vector<Itemset> benign,
                                            std::vector<Itemset> malware);
};

}  // namespace mdlct
