#pragma once

#include <span>
#include <vector>

#include "amrkit/adapters.hpp"
#include "amrkit/corpus.hpp"

namespace amrkit {

inline constexpr double kDefaultFilterThreshold = 0.85;

struct FilterResult {
  std::vector<CorpusRecord> kept;
  std::vector<CorpusRecord> dropped;
};

// Back-translation consistency filter. Each record's src is translated
// back to English and compared with meta["en"]:
//   quality = cosine(embed(meta["en"]), embed(back-translation))
// Records with quality >= threshold are kept. Records that cannot be
// scored (English source, no meta["en"], adapter failure) are dropped
// without a quality and with meta["filter_error"] set. Both outputs keep
// input order; scored records also get meta["bt"].
FilterResult bt_filter(std::span<const CorpusRecord> records, const EmbeddingProvider& provider,
                       const Translator& back_translator,
                       double threshold = kDefaultFilterThreshold);

// Threshold step alone, for records already scored by bt_filter. Records
// without a quality are dropped.
FilterResult apply_threshold(std::span<const CorpusRecord> records, double threshold);

}  // namespace amrkit
