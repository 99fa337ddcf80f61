#include "amrkit/seq_model.hpp"

#include <cctype>
#include <stdexcept>

namespace amrkit::kd {

Sentence split_words(std::string_view text) {
  Sentence words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) words.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return words;
}

std::string join_words(std::span<const std::string> words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += ' ';
    out += words[i];
  }
  return out;
}

Vocabulary::Vocabulary(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  bool has_eos = false;
  for (const auto& t : tokens_) has_eos = has_eos || t == kEos;
  if (!has_eos) tokens_.emplace_back(kEos);
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (tokens_[i] == kBos) throw std::invalid_argument("BOS is not an output token");
    if (!index_.emplace(tokens_[i], static_cast<TokenId>(i)).second) {
      throw std::invalid_argument("duplicate vocabulary token '" + tokens_[i] + "'");
    }
  }
  eos_ = index_.at(std::string(kEos));
}

std::optional<TokenId> Vocabulary::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TokenId Vocabulary::id(std::string_view token) const {
  auto found = find(token);
  if (!found) throw std::out_of_range("token '" + std::string(token) + "' not in vocabulary");
  return *found;
}

std::vector<TokenId> Vocabulary::encode(std::span<const std::string> tokens) const {
  std::vector<TokenId> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) ids.push_back(id(t));
  return ids;
}

std::vector<std::string> Vocabulary::decode(std::span<const TokenId> ids, bool strip_eos) const {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (TokenId id : ids) {
    if (strip_eos && id == eos_) continue;
    out.push_back(token(id));
  }
  return out;
}

}  // namespace amrkit::kd
