#pragma once

#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "mdlct/classify.hpp"
#include "mdlct/dataset.hpp"

namespace mdlct {

enum class Verdict { benign, malware };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view text);

/// A black-box hard-decision target classifier. query() enforces the
/// optional budget, counts issued queries, and (opt-in, for deterministic
/// targets) memoizes verdicts; memoized hits are not charged.
class Oracle {
 public:
  virtual ~Oracle() = default;

  Verdict query(const Itemset& t);

  std::uint64_t query_count() const { return count_; }
  void set_budget(std::optional<std::uint64_t> budget) { budget_ = budget; }
  std::optional<std::uint64_t> budget() const { return budget_; }
  void enable_memoization(bool on);

 protected:
  virtual Verdict do_query(const Itemset& t) = 0;

 private:
  std::uint64_t count_ = 0;
  std::optional<std::uint64_t> budget_;
  bool memoize_ = false;
  std::unordered_map<Itemset, Verdict, ItemsetHash> memo_;
};

/// Answers every query with one fixed verdict.
class FixedOracle : public Oracle {
 public:
  explicit FixedOracle(Verdict verdict) : verdict_(verdict) {}

 protected:
  Verdict do_query(const Itemset&) override { return verdict_; }

 private:
  Verdict verdict_;
};

/// Wraps a ClassifierModel whose labels are "benign"/"malware"; verdicts are
/// bit-identical to classify().
class MdlOracle : public Oracle {
 public:
  explicit MdlOracle(ClassifierModel model);

 protected:
  Verdict do_query(const Itemset& t) override;

 private:
  ClassifierModel model_;
};

/// Talks the line protocol to a child process spawned via `/bin/sh -c cmd`:
/// one FIMI line per query on the child's stdin, one verdict line ("benign"
/// or "malware", LF-terminated) per transaction on its stdout. Any other
/// token is a ProtocolError; a dead pipe is a TransportError. Queries are
/// serialized over the single pipe.
class SubprocessOracle : public Oracle {
 public:
  explicit SubprocessOracle(std::string command);
  ~SubprocessOracle() override;

  SubprocessOracle(const SubprocessOracle&) = delete;
  SubprocessOracle& operator=(const SubprocessOracle&) = delete;

 protected:
  Verdict do_query(const Itemset& t) override;

 private:
  void ensure_spawned();
  void shutdown();

  std::string command_;
  std::FILE* to_child_ = nullptr;
  std::FILE* from_child_ = nullptr;
  long pid_ = -1;
};

/// POST {base_url}/classify with body {"items":[...]}; expects HTTP 200 and
/// {"label":"benign"|"malware"}. If the MDLCT_ORACLE_TOKEN environment
/// variable is set its value is sent as a bearer token.
class HttpOracle : public Oracle {
 public:
  explicit HttpOracle(std::string base_url);
  ~HttpOracle() override;

 protected:
  Verdict do_query(const Itemset& t) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// D_b: the pool samples the oracle labels benign, order preserved, over the
/// pool's alphabet. Issues exactly |pool| queries. An empty result is an
/// error — no benign model can be built from nothing.
Dataset build_benign_pool(Oracle& oracle, const Dataset& pool);

/// Fraction of samples the oracle labels benign (0 for an empty input).
/// Issues exactly |samples| queries.
double evasion_rate(Oracle& oracle, const Dataset& samples);

}  // namespace mdlct
