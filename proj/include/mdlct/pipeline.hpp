#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdlct/clope.hpp"
#include "mdlct/codetable.hpp"
#include "mdlct/mining.hpp"

namespace mdlct {

/// Parameters for model construction. Defaults: minsup 0.001·n, repulsion 4,
/// 16 clusters, quality threshold 0.1, epsilon 0.1.
struct ModelParams {
  MinsupSpec minsup = MinsupSpec::relative(0.001);
  double repulsion = 4.0;
  std::size_t max_clusters = 16;
  double quality_threshold = 0.1;
  double epsilon = kDefaultEpsilon;
  bool skip_clustering = false;
  std::size_t max_passes = 10;
  std::optional<std::uint64_t> shuffle_seed;
};

/// Cluster-guided candidate mining: cluster `d`, keep high-quality clusters,
/// mine each with the minsup resolved against |d|, union the pattern sets,
/// recompute supports against the full dataset and order. Falls back to
/// mining the whole dataset (with a warning) when no cluster passes the
/// quality threshold. With `skip_clustering` this is exactly
/// mine_closed(d, minsup).
std::vector<MinedPattern> candidates_via_clustering(
    const Dataset& d, const ModelParams& params,
    std::vector<std::string>* warnings = nullptr);

/// build_krimp over candidates_via_clustering.
CodeTable build_model(const Dataset& d, const ModelParams& params,
                      std::vector<std::string>* warnings = nullptr);

}  // namespace mdlct
