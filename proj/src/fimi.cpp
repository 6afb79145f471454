#include "mdlct/fimi.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "mdlct/errors.hpp"

namespace mdlct {

namespace {

Item parse_item(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("malformed item '" + std::string(token) + "'", line);
  }
  if (value > 0xFFFFFFFFull) {
    throw ParseError("item id '" + std::string(token) + "' out of range",
                     line);
  }
  return static_cast<Item>(value);
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Dataset parse_fimi(std::istream& in, std::optional<Itemset> alphabet,
                   bool allow_empty) {
  std::vector<Itemset> transactions;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    std::vector<Item> items;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() &&
             (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
        ++pos;
      }
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
             line[end] != '\r') {
        ++end;
      }
      items.push_back(parse_item({line.data() + pos, end - pos}, lineno));
      pos = end;
    }
    try {
      transactions.push_back(Itemset::from_unsorted(std::move(items)));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (transactions.empty() && !allow_empty) {
    throw ParseError("input contains no transactions", lineno);
  }
  try {
    return Dataset(std::move(transactions), std::move(alphabet));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Dataset load_fimi(const std::filesystem::path& path,
                  std::optional<Itemset> alphabet, bool allow_empty) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return parse_fimi(in, std::move(alphabet), allow_empty);
}

Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format,
                     std::optional<Itemset> alphabet) {
  switch (format) {
    case DatasetFormat::fimi:
      return load_fimi(path, std::move(alphabet));
  }
  throw DomainError("unknown dataset format");
}

std::string format_fimi(const Dataset& d) {
  std::string out;
  for (const auto& t : d.transactions()) {
    out += t.to_string();
    out += '\n';
  }
  return out;
}

void save_fimi(const Dataset& d, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << format_fimi(d);
}

std::unordered_map<Item, std::string> load_name_map(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::unordered_map<Item, std::string> names;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("expected 'id<TAB>name'", lineno);
    }
    Item id = parse_item({line.data(), tab}, lineno);
    std::string name = line.substr(tab + 1);
    if (name.empty()) throw ParseError("empty name", lineno);
    if (!names.emplace(id, std::move(name)).second) {
      throw ParseError("duplicate id " + std::to_string(id), lineno);
    }
  }
  return names;
}

}  // namespace mdlct
