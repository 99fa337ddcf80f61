#include "amrkit/corpus_stats.hpp"

#include <cstdio>

#include "json.hpp"

namespace amrkit {

namespace {

constexpr std::array<Split, 3> kSplits = {Split::kTrain, Split::kDev, Split::kTest};

std::string pad(const std::string& s, std::size_t width, bool left) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return left ? s + fill : fill + s;
}

}  // namespace

void CorpusStats::add(const CorpusRecord& r) {
  StatsCell& c = cells_[static_cast<std::size_t>(r.lang)][static_cast<std::size_t>(r.split)];
  const bool gold = r.provenance == Provenance::kGold;
  c.gold = (c.count == 0 ? gold : c.gold && gold);
  ++c.count;
}

void CorpusStats::set(Lang lang, Split split, std::size_t count, bool gold) {
  cells_[static_cast<std::size_t>(lang)][static_cast<std::size_t>(split)] = {count, gold};
}

const StatsCell& CorpusStats::cell(Lang lang, Split split) const {
  return cells_[static_cast<std::size_t>(lang)][static_cast<std::size_t>(split)];
}

std::size_t CorpusStats::total() const {
  std::size_t n = 0;
  for (const auto& row : cells_) {
    for (const auto& c : row) n += c.count;
  }
  return n;
}

std::string CorpusStats::render_table() const {
  std::string out = pad("Language", 13, true);
  for (Split s : kSplits) {
    std::string name(split_name(s));
    name[0] = static_cast<char>(name[0] - 'a' + 'A');
    out += pad(name, 10, false);
  }
  out += '\n';
  for (Lang l : kAllLangs) {
    out += pad(std::string(lang_name(l)) + "(" + std::string(lang_code(l)) + ")", 13, true);
    for (Split s : kSplits) {
      const StatsCell& c = cell(l, s);
      // A trailing column keeps digits aligned whether or not a cell is starred.
      out += pad(with_thousands(c.count), 9, false) + (c.gold && c.count > 0 ? "*" : " ");
    }
    out += '\n';
  }
  return out;
}

std::string CorpusStats::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (Lang l : kAllLangs) {
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (Split s : kSplits) {
      const StatsCell& c = cell(l, s);
      row[std::string(split_name(s))] = {{"count", c.count}, {"gold", c.gold && c.count > 0}};
    }
    j[std::string(lang_code(l))] = row;
  }
  return j.dump();
}

CorpusStats corpus_stats(std::span<const CorpusRecord> records) {
  CorpusStats stats;
  for (const auto& r : records) stats.add(r);
  return stats;
}

std::string with_thousands(std::size_t n) {
  std::string digits = std::to_string(n);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0 && (digits.size() - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

}  // namespace amrkit
