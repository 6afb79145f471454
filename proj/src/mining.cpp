#include "mdlct/mining.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "mdlct/errors.hpp"

namespace mdlct {

MinsupSpec MinsupSpec::absolute(std::uint64_t count) {
  if (count < 1) throw DomainError("absolute minsup must be >= 1");
  MinsupSpec s;
  s.relative_ = false;
  s.count_ = count;
  return s;
}

MinsupSpec MinsupSpec::relative(double fraction) {
  if (!(fraction > 0.0) || !(fraction < 1.0)) {
    throw DomainError("relative minsup must be in (0,1)");
  }
  MinsupSpec s;
  s.relative_ = true;
  s.fraction_ = fraction;
  return s;
}

MinsupSpec MinsupSpec::parse(const std::string& text) {
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw DomainError("cannot parse minsup '" + text + "'");
  }
  if (value > 0.0 && value < 1.0) return relative(value);
  if (value >= 1.0 && value == std::floor(value)) {
    return absolute(static_cast<std::uint64_t>(value));
  }
  throw DomainError("minsup must be an integer >= 1 or a fraction in (0,1)");
}

std::uint64_t MinsupSpec::resolve(std::size_t n) const {
  if (!relative_) return count_;
  auto resolved =
      static_cast<std::uint64_t>(std::ceil(fraction_ * static_cast<double>(n)));
  return std::max<std::uint64_t>(resolved, 1);
}

std::string MinsupSpec::to_string() const {
  if (relative_) {
    std::string out(32, '\0');
    auto [ptr, ec] = std::to_chars(out.data(), out.data() + out.size(),
                                   fraction_);
    out.resize(ptr - out.data());
    return out;
  }
  return std::to_string(count_);
}

namespace {

// Depth-first closure-extension enumeration over dense item ranks.
// Each closed set is produced exactly once: extending closed set P by a rank
// above its generator rank and taking the closure; branches whose closure
// touches a rank below the extension (outside P) are duplicates and cut.
class ClosedMiner {
 public:
  ClosedMiner(const Dataset& d, std::uint64_t minsup)
      : dataset_(d), minsup_(minsup), items_(d.alphabet().items()) {
    rank_of_.reserve(items_.size());
    for (std::size_t r = 0; r < items_.size(); ++r) rank_of_[items_[r]] = r;
  }

  std::vector<MinedPattern> run() {
    const std::size_t n = dataset_.size();
    if (n < minsup_) return {};
    std::vector<std::uint32_t> all(n);
    for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
    std::vector<bool> root = closure(all);
    expand(root, all, /*generator_rank=*/-1);
    return std::move(out_);
  }

 private:
  // true per rank for items present in every listed transaction.
  std::vector<bool> closure(const std::vector<std::uint32_t>& tids) const {
    std::vector<std::uint32_t> counts(items_.size(), 0);
    for (auto tid : tids) {
      for (Item item : dataset_[tid]) ++counts[rank_of_.at(item)];
    }
    std::vector<bool> in(items_.size(), false);
    for (std::size_t r = 0; r < items_.size(); ++r) {
      in[r] = counts[r] == tids.size() && !tids.empty();
    }
    return in;
  }

  void emit(const std::vector<bool>& member, std::uint64_t support) {
    std::vector<Item> items;
    for (std::size_t r = 0; r < member.size(); ++r) {
      if (member[r]) items.push_back(items_[r]);
    }
    if (items.empty()) return;
    out_.push_back({Itemset::from_sorted(std::move(items)), support});
  }

  void expand(const std::vector<bool>& member,
              const std::vector<std::uint32_t>& tids, long generator_rank) {
    emit(member, tids.size());
    for (std::size_t r = generator_rank + 1; r < items_.size(); ++r) {
      if (member[r]) continue;
      auto list = dataset_.tidlist(items_[r]);
      std::vector<std::uint32_t> extended;
      std::set_intersection(tids.begin(), tids.end(), list.begin(),
                            list.end(), std::back_inserter(extended));
      if (extended.size() < minsup_) continue;
      std::vector<bool> closed = closure(extended);
      bool prefix_preserved = true;
      for (std::size_t q = 0; q < r; ++q) {
        if (closed[q] != member[q]) {
          prefix_preserved = false;
          break;
        }
      }
      if (!prefix_preserved) continue;
      expand(closed, extended, static_cast<long>(r));
    }
  }

  const Dataset& dataset_;
  std::uint64_t minsup_;
  const std::vector<Item>& items_;
  std::unordered_map<Item, std::size_t> rank_of_;
  std::vector<MinedPattern> out_;
};

}  // namespace

std::vector<MinedPattern> mine_closed(const Dataset& d,
                                      const MinsupSpec& minsup) {
  if (d.empty()) throw DomainError("mine_closed: dataset is empty");
  ClosedMiner miner(d, minsup.resolve(d.size()));
  return order_candidates(miner.run());
}

std::vector<MinedPattern> brute_force_closed(const Dataset& d,
                                             const MinsupSpec& minsup) {
  const std::size_t m = d.alphabet_size();
  if (m > 20) {
    throw DomainError("brute_force_closed: refusing alphabet of " +
                      std::to_string(m) + " items (limit 20)");
  }
  if (d.empty()) throw DomainError("brute_force_closed: dataset is empty");
  const std::uint64_t ms = minsup.resolve(d.size());
  const auto& items = d.alphabet().items();

  // Transactions as rank bitmasks.
  std::vector<std::uint32_t> tx_masks;
  tx_masks.reserve(d.size());
  for (const auto& t : d.transactions()) {
    std::uint32_t mask = 0;
    for (std::size_t r = 0; r < m; ++r) {
      if (t.contains(items[r])) mask |= 1u << r;
    }
    tx_masks.push_back(mask);
  }
  auto support_of = [&](std::uint32_t mask) {
    std::uint64_t s = 0;
    for (auto tm : tx_masks) {
      if ((tm & mask) == mask) ++s;
    }
    return s;
  };

  std::vector<MinedPattern> out;
  const std::uint64_t limit = 1ull << m;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    auto s = support_of(static_cast<std::uint32_t>(mask));
    if (s < ms) continue;
    bool closed = true;
    for (std::size_t r = 0; r < m && closed; ++r) {
      if (mask & (1ull << r)) continue;
      if (support_of(static_cast<std::uint32_t>(mask | (1ull << r))) == s) {
        closed = false;
      }
    }
    if (!closed) continue;
    std::vector<Item> pattern;
    for (std::size_t r = 0; r < m; ++r) {
      if (mask & (1ull << r)) pattern.push_back(items[r]);
    }
    out.push_back({Itemset::from_sorted(std::move(pattern)), s});
  }
  return order_candidates(std::move(out));
}

std::vector<MinedPattern> order_candidates(
    std::vector<MinedPattern> patterns) {
  std::sort(patterns.begin(), patterns.end(),
            [](const MinedPattern& a, const MinedPattern& b) {
              if (a.support != b.support) return a.support > b.support;
              if (a.pattern.size() != b.pattern.size()) {
                return a.pattern.size() > b.pattern.size();
              }
              return a.pattern < b.pattern;
            });
  return patterns;
}

}  // namespace mdlct
