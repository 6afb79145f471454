#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mdlct/dataset.hpp"

namespace mdlct {

struct MinedPattern {
  Itemset pattern;
  std::uint64_t support = 0;

  bool operator==(const MinedPattern&) const = default;
};

/// Minimum support threshold, either an absolute count (>= 1) or a fraction
/// of the dataset size in (0,1) resolved as ceil(fraction * n).
class MinsupSpec {
 public:
  static MinsupSpec absolute(std::uint64_t count);
  static MinsupSpec relative(double fraction);

  /// CLI syntax: an integer value >= 1 is absolute, a value in (0,1) is
  /// relative. "1.0" resolves to absolute 1.
  static MinsupSpec parse(const std::string& text);

  std::uint64_t resolve(std::size_t n) const;
  bool is_relative() const { return relative_; }
  std::string to_string() const;

 private:
  MinsupSpec() = default;
  bool relative_ = false;
  std::uint64_t count_ = 1;
  double fraction_ = 0.0;
};

/// All closed frequent itemsets of `d` (non-empty patterns with support >=
/// minsup and no proper superset of equal support), each with its support,
/// in candidate order. Closure-extension depth-first search over tidlists.
std::vector<MinedPattern> mine_closed(const Dataset& d,
                                      const MinsupSpec& minsup);

/// Reference oracle: enumerates every non-empty subset of the alphabet and
/// filters. Refuses alphabets larger than 20 items.
std::vector<MinedPattern> brute_force_closed(const Dataset& d,
                                             const MinsupSpec& minsup);

/// Candidate order: support descending, then length descending, then items
/// lexicographically ascending.
std::vector<MinedPattern> order_candidates(std::vector<MinedPattern> patterns);

}  // namespace mdlct
