#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mdlct/dataset.hpp"
#include "mdlct/mining.hpp"

namespace mdlct {

/// Pseudo-usage granted to zero-usage rows so that every singleton keeps a
/// (long) code and unseen transactions stay coverable.
inline constexpr double kDefaultEpsilon = 0.1;

struct CodeTableRow {
  Itemset pattern;
  std::uint64_t usage = 0;
  std::uint32_t code_length_bits = 0;
  /// Support in the training data at insertion time; second cover-order key.
  std::uint64_t support_hint = 0;
};

/// Exact ceil(log2(total / usage)) for positive doubles, computed by binary
/// scaling so that representable inputs never suffer rounding drift.
std::uint32_t shannon_code_length(double usage_eps, double total_eps);

/// KRIMP-style code table. Rows are kept in cover order: pattern length
/// descending, then insertion support descending, then items ascending.
/// Every singleton of the alphabet is always present exactly once, so any
/// transaction over the alphabet is coverable. Zero-usage rows keep an
/// `epsilon` pseudo-usage in the Shannon-code denominator but add nothing
/// to the model cost.
class CodeTable {
 public:
  /// Singleton-only table over the alphabet of `d`, usages computed from
  /// covering every transaction.
  static CodeTable standard(const Dataset& d,
                            double epsilon = kDefaultEpsilon);

  const std::vector<CodeTableRow>& rows() const { return rows_; }
  const Itemset& alphabet() const { return alphabet_; }
  double epsilon() const { return epsilon_; }

  bool has_pattern(const Itemset& pattern) const;
  std::size_t nonsingleton_count() const;

  /// Greedy cover: scan rows in cover order, take every row whose pattern
  /// fits in the still-uncovered items. The result is pairwise disjoint and
  /// unions to `t` exactly.
  std::vector<Itemset> cover(const Itemset& t) const;
  std::vector<std::size_t> cover_row_indices(const Itemset& t) const;

  /// Inserts a new row at its cover-order position (usage 0 until the next
  /// recompute). The pattern must be over the alphabet and not present yet.
  void insert_pattern(const Itemset& pattern, std::uint64_t support);

  /// Removes a non-singleton row; returns false when absent.
  bool erase_pattern(const Itemset& pattern);

  /// usage(P) = number of transactions of `d` whose cover contains P;
  /// code lengths are refreshed afterwards.
  void recompute_usages(const Dataset& d);

  /// Recomputes every code_length_bits from the current usages.
  void refresh_code_lengths();

  /// Drops non-singleton rows whose usage is zero (their covers are
  /// unaffected); singletons are always retained. Returns the number of
  /// rows removed.
  std::size_t prune_zero_usage_nonsingletons();

  /// Bits to encode one transaction: sum of code lengths over its cover.
  std::uint64_t encoded_length(const Itemset& t) const;
  /// Bits to encode the whole dataset.
  std::uint64_t encoded_length(const Dataset& d) const;

  /// Bits to encode the table itself. Per row in use (usage > 0):
  /// one log2(m+1) per pattern item, one log2(m+1) row separator, and the
  /// row's code length. Zero-usage rows cost nothing.
  double model_length() const;

  /// encoded_length(d) + model_length(): the two-part objective.
  double total_length(const Dataset& d) const;

  /// Text format, one row per line in cover order:
  ///   alphabet=<m> epsilon=<eps>
  ///   <items> | usage=<u> len=<l>
  /// Round-trips bit-exactly; stored lengths are validated against the
  /// usages on parse.
  std::string to_text() const;
  static CodeTable from_text(const std::string& text);
  void save(const std::filesystem::path& path) const;
  static CodeTable load(const std::filesystem::path& path);

 private:
  CodeTable(Itemset alphabet, double epsilon);

  double total_usage_eps() const;

  std::vector<CodeTableRow> rows_;
  Itemset alphabet_;
  double epsilon_ = kDefaultEpsilon;
};

/// Per-step record of a greedy build; `accepted_totals` is strictly
/// decreasing and starts below `standard_total`.
struct KrimpTrace {
  double standard_total = 0.0;
  std::vector<double> accepted_totals;
  std::size_t rejected = 0;
};

/// Greedy KRIMP construction: start from the standard table and admit each
/// non-singleton candidate (in candidate order) exactly when it strictly
/// shrinks the total length. Non-singleton rows whose usage drops to zero
/// after an acceptance are pruned.
CodeTable build_krimp(const Dataset& d,
                      const std::vector<MinedPattern>& candidates,
                      double epsilon = kDefaultEpsilon,
                      KrimpTrace* trace = nullptr);

}  // namespace mdlct
