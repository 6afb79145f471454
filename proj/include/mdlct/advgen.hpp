#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "mdlct/codetable.hpp"
#include "mdlct/dataset.hpp"

namespace mdlct {

enum class AdvStatus {
  /// The best non-singleton pattern was added.
  pattern_added,
  /// only_if_shorter was set and no addition shortened the encoding.
  kept_original,
  /// The table has no non-singleton rows; sample returned unchanged.
  no_candidate_rows,
};

std::string_view to_string(AdvStatus s);

/// Outcome of one adversarial generation. The original items are always
/// preserved: adversarial == original ∪ added_pattern.
struct AdversarialResult {
  Itemset original;
  Itemset adversarial;
  Itemset added_pattern;
  std::uint64_t length_before = 0;
  std::uint64_t length_after = 0;
  AdvStatus status = AdvStatus::pattern_added;
};

/// Picks the non-singleton row P of `benign_table` minimizing
/// ℓ(t ∪ P | benign_table) — ties go to the earliest row in cover order —
/// and adds it to the sample. Singleton rows never need scanning: a helpful
/// singleton only helps by completing some longer pattern, which is itself
/// scanned. By default the pattern is added even when it does not shorten
/// the encoding; `only_if_shorter` keeps the original in that case.
AdversarialResult generate(const CodeTable& benign_table, const Itemset& t,
                           bool only_if_shorter = false);

/// Independent per-sample generation; output order matches input order.
std::vector<AdversarialResult> batch_generate(const CodeTable& benign_table,
                                              const Dataset& malware,
                                              bool only_if_shorter = false);

}  // namespace mdlct
