#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amrkit/corpus.hpp"

namespace amrkit {

inline constexpr std::size_t kDefaultMinCount = 5;

// True for PropBank-style frame names such as want-01.
bool is_frame_name(std::string_view token);

// Relation labels and frame names (in concept position) that occur at
// least `min_count` times across the records' targets. Sorted by count
// descending, then lexicographically.
std::vector<std::string> augment_vocab(std::span<const CorpusRecord> gold,
                                       std::size_t min_count = kDefaultMinCount);

}  // namespace amrkit
