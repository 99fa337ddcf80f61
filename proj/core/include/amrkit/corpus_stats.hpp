#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>

#include "amrkit/corpus.hpp"

namespace amrkit {

struct StatsCell {
  std::size_t count = 0;
  bool gold = false;  // every record in the cell is gold
};

// Instance counts per (language, split), laid out as a data table:
// one row per language, gold cells marked with `*`.
class CorpusStats {
 public:
  void add(const CorpusRecord& r);
  // Sets a cell directly (fixtures, merged reports).
  void set(Lang lang, Split split, std::size_t count, bool gold);

  const StatsCell& cell(Lang lang, Split split) const;
  std::size_t total() const;

  std::string render_table() const;
  std::string to_json() const;

 private:
  std::array<std::array<StatsCell, 3>, 5> cells_{};
};

CorpusStats corpus_stats(std::span<const CorpusRecord> records);

// 36521 -> "36,521"
std::string with_thousands(std::size_t n);

}  // namespace amrkit
