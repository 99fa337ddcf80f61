#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amrkit/adapters.hpp"
#include "amrkit/lang.hpp"

namespace amrkit {

inline constexpr const char* kMaskToken = "<mask>";

// Number of words masked at `rate` out of `n`: rate*n rounded half away
// from zero.
std::size_t masked_count(std::size_t n, double rate);

// Replaces exactly masked_count(n, rate) whitespace-separated words with
// <mask>, positions drawn uniformly without replacement from `seed`. Output
// words are joined by single spaces; the word count never changes.
std::string word_delete(std::string_view sentence, double rate, std::uint64_t seed);

enum class NoiseKind { kNone, kWordDelete, kMtAdapter };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::kNone;
  double rate = 0.0;                   // word_delete only, in [0, 1]
  std::optional<std::uint64_t> seed;   // required for word_delete
  Lang target = Lang::kDE;             // mt_adapter output language
  std::shared_ptr<const Translator> adapter;
  // Draw fresh masks each epoch instead of fixing them per sentence.
  bool resample_per_epoch = false;

  // "none", "mt", or "delete:K" with K in percent.
  static NoiseSpec parse(std::string_view text);
  // Throws std::invalid_argument when the invariants above do not hold.
  void validate() const;
  std::string describe() const;
};

// Student-side input for each English sentence. Sentence i under
// word_delete uses derive_seed(seed, i) (mixed with the epoch when
// resampling), so results do not depend on batching. std::nullopt marks an
// adapter failure for that sentence.
std::vector<std::optional<std::string>> apply_noise(const NoiseSpec& spec,
                                                    std::span<const std::string> english,
                                                    std::uint64_t epoch = 0);

}  // namespace amrkit
