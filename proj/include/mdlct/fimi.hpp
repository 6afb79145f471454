#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <unordered_map>

#include "mdlct/dataset.hpp"

namespace mdlct {

enum class DatasetFormat { fimi };

/// FIMI text format: one transaction per non-empty line, decimal item ids
/// separated by whitespace, LF line endings, no header. Duplicate ids within
/// a line, malformed tokens and inputs with no transactions are rejected
/// with the offending line number.
///
/// `alphabet`, when given, widens the dataset's alphabet beyond the items
/// actually present. `allow_empty` accepts inputs with zero transactions
/// (used only where an empty sample list is a meaningful input).
Dataset parse_fimi(std::istream& in, std::optional<Itemset> alphabet = {},
                   bool allow_empty = false);
Dataset load_fimi(const std::filesystem::path& path,
                  std::optional<Itemset> alphabet = {},
                  bool allow_empty = false);

Dataset load_dataset(const std::filesystem::path& path,
                     DatasetFormat format = DatasetFormat::fimi,
                     std::optional<Itemset> alphabet = {});

/// Normalized serialization: items ascending, single spaces, LF endings.
/// load -> save -> load round-trips exactly.
std::string format_fimi(const Dataset& d);
void save_fimi(const Dataset& d, const std::filesystem::path& path);

/// Sidecar name map, one "id<TAB>name" per line.
std::unordered_map<Item, std::string> load_name_map(
    const std::filesystem::path& path);

}  // namespace mdlct
