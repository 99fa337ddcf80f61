#include "amrkit/augment_vocab.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "amrkit/linearize.hpp"

namespace amrkit {

bool is_frame_name(std::string_view token) {
  if (token.size() < 4) return false;
  const std::size_t n = token.size();
  if (token[n - 3] != '-' || !std::isdigit(static_cast<unsigned char>(token[n - 2])) ||
      !std::isdigit(static_cast<unsigned char>(token[n - 1]))) {
    return false;
  }
  const auto name = token.substr(0, n - 3);
  if (!std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
  });
}

std::vector<std::string> augment_vocab(std::span<const CorpusRecord> gold, std::size_t min_count) {
  std::map<std::string, std::size_t> counts;
  for (const auto& r : gold) {
    if (!r.tgt) continue;
    const auto& toks = r.tgt->tokens;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      const TokenClass c = classify_token(toks[i]);
      if (c == TokenClass::kRelation) {
        ++counts[toks[i]];
      } else if (c == TokenClass::kAtom && i >= 2 && toks[i - 2] == "(" &&
                 classify_token(toks[i - 1]) == TokenClass::kVariable && is_frame_name(toks[i])) {
        ++counts[toks[i]];
      }
    }
  }
  std::vector<std::pair<std::string, std::size_t>> items;
  for (auto& [tok, n] : counts) {
    if (n >= min_count) items.emplace_back(tok, n);
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::string> out;
  out.reserve(items.size());
  for (auto& [tok, n] : items) out.push_back(std::move(tok));
  return out;
}

}  // namespace amrkit
