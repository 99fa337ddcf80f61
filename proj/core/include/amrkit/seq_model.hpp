#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace amrkit::kd {

using TokenId = std::uint32_t;
using Sentence = std::vector<std::string>;

Sentence split_words(std::string_view text);
std::string join_words(std::span<const std::string> words);

// Ordered output token set. EOS is always present. BOS is not an output
// token: models see it only as left padding of the context, so it never
// receives probability mass.
class Vocabulary {
 public:
  static constexpr std::string_view kEos = "</s>";
  static constexpr std::string_view kBos = "<s>";

  // Appends EOS when `tokens` lacks it. Throws std::invalid_argument on
  // duplicates or an explicit BOS.
  explicit Vocabulary(std::vector<std::string> tokens);

  std::size_t size() const { return tokens_.size(); }
  TokenId eos() const { return eos_; }
  const std::string& token(TokenId id) const { return tokens_.at(id); }
  std::optional<TokenId> find(std::string_view token) const;
  TokenId id(std::string_view token) const;  // throws std::out_of_range
  const std::vector<std::string>& tokens() const { return tokens_; }

  std::vector<TokenId> encode(std::span<const std::string> tokens) const;
  std::vector<std::string> decode(std::span<const TokenId> ids, bool strip_eos = true) const;

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> index_;
  TokenId eos_ = 0;
};

// Next-token distribution p(y_t | y_<t, x). Implementations must be safe
// for concurrent const calls, and next_dist must depend only on its
// arguments and return a vector of vocabulary().size() non-negative values
// summing to 1.
class SeqModel {
 public:
  virtual ~SeqModel() = default;
  virtual const Vocabulary& vocabulary() const = 0;
  virtual std::vector<double> next_dist(std::span<const TokenId> prefix,
                                        std::span<const std::string> input) const = 0;
};

}  // namespace amrkit::kd
