#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mdlct/advgen.hpp"
#include "mdlct/oracle.hpp"
#include "mdlct/pipeline.hpp"

namespace mdlct {

/// End-to-end attack configuration. All referenced files must exist at
/// startup; with a fixed seed the produced files are byte-identical across
/// runs.
struct AttackConfig {
  std::filesystem::path benign_pool_path;
  std::filesystem::path malware_path;
  std::filesystem::path out_dir;
  ModelParams params;
  bool only_if_shorter = false;
  std::uint64_t seed = 0;
  bool shuffle = false;
};

struct AttackReport {
  std::size_t pool_size = 0;
  std::size_t benign_pool_size = 0;
  std::size_t malware_count = 0;
  double evasion_before = 0.0;
  double evasion_after = 0.0;
  std::uint64_t query_count = 0;
  std::size_t table_rows = 0;
  std::size_t table_nonsingleton_rows = 0;
  std::size_t table_alphabet_size = 0;
  double table_epsilon = 0.0;
  double table_total_length = 0.0;
  std::vector<AdversarialResult> results;
  std::vector<std::string> warnings;
};

/// Core attack sequence on in-memory datasets:
/// build_benign_pool -> build_model -> batch_generate -> evasion rates
/// before and after. Both datasets are widened to their union alphabet
/// first. Any stage failure is rethrown with a stage tag.
AttackReport run_attack(const Dataset& pool, const Dataset& malware,
                        const ModelParams& params, Oracle& oracle,
                        bool only_if_shorter = false);

/// File-level wrapper: loads the pool and malware FIMI files (the malware
/// file may be empty), runs the attack, and writes adversarial.fimi,
/// report.txt and report.json into cfg.out_dir.
AttackReport run_attack_files(const AttackConfig& cfg, Oracle& oracle);

/// Report serializations; deterministic field order, no timestamps.
std::string format_report_text(const AttackReport& report);
std::string format_report_json(const AttackReport& report,
                               const AttackConfig* cfg = nullptr);

/// The generated adversarial samples as a dataset over `alphabet`.
Dataset adversarial_dataset(const std::vector<AdversarialResult>& results,
                            const Itemset& alphabet);

}  // namespace mdlct
