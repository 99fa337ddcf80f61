#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "amrkit/amr_graph.hpp"
#include "amrkit/smatch.hpp"

namespace amrkit {

enum class Alignment { kPosition, kId };

struct CorpusSmatchOptions {
  std::size_t restarts = kDefaultRestarts;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  Alignment alignment = Alignment::kPosition;
};

struct CorpusReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t matched = 0;
  std::size_t pred_total = 0;
  std::size_t gold_total = 0;
  std::size_t n_records = 0;
  // Per-record results in gold order.
  std::vector<SmatchResult> records;
  std::vector<std::string> record_ids;
};

// Micro average: summed matched counts over summed triple totals. Record i
// is scored with a seed derived from (seed, i), so the result does not
// depend on `jobs`. Throws CountMismatch on unequal record counts or, for
// id alignment, on ids missing from either side.
CorpusReport corpus_smatch(std::span<const AmrGraph> pred, std::span<const AmrGraph> gold,
                           const CorpusSmatchOptions& options = {});

// Micro average over already-scored records.
CorpusReport aggregate(std::vector<SmatchResult> records);

}  // namespace amrkit
