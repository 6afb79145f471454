#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mdlct/dataset.hpp"

namespace mdlct {

/// One CLOPE cluster with its histogram statistics:
///   size_sum  S = sum of member transaction sizes,
///   width     W = number of distinct items across members.
struct Cluster {
  std::vector<std::uint32_t> members;  // transaction indices, ascending
  std::uint64_t size_sum = 0;
  std::uint32_t width = 0;
  std::unordered_map<Item, std::uint32_t> occurrences;
};

struct Clustering {
  std::vector<Cluster> clusters;
  double repulsion = 0.0;
  std::size_t max_clusters = 0;
};

/// Greedy CLOPE clustering maximizing
///   profit = [sum_i S_i * |C_i| / W_i^r] / sum_i |C_i|.
/// One allocation pass in dataset order (new clusters allowed while the
/// count is below `max_clusters`), then move passes until no move improves
/// profit or `max_passes` is reached. Ties prefer the lowest-index cluster,
/// and an existing cluster over opening a new one. Passing `shuffle_seed`
/// processes transactions in a seeded shuffled order instead of dataset
/// order. Deterministic given inputs.
Clustering cluster(const Dataset& d, double repulsion,
                   std::size_t max_clusters, std::size_t max_passes = 10,
                   std::optional<std::uint64_t> shuffle_seed = {});

/// Height of the cluster, H = S / W.
double height(const Cluster& c);

/// H(c) / |c|, in (0,1]; 1 exactly when all members are identical.
double quality(const Cluster& c);

/// Splits clusters into (high-quality, low-quality) by `threshold` in
/// [0,1]: quality >= threshold is high-quality. Relative order preserved.
std::pair<std::vector<Cluster>, std::vector<Cluster>> partition_hq(
    const Clustering& cl, double threshold);

}  // namespace mdlct
