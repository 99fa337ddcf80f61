#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "amrkit/seq_model.hpp"

namespace amrkit::kd {

struct ToyModelConfig {
  std::size_t order = 2;     // n-gram order m; the context is the previous m-1 tokens
  double alpha = 0.1;        // additive smoothing
  std::uint32_t buckets = 4096;  // input feature hash range
};

// Count-based conditional model. Probabilities are smoothed counts keyed by
// (previous m-1 output tokens, hashed bag of input words):
//
//   p(v | ctx, x) = (c[ctx, h(x), v] + alpha) / (c[ctx, h(x)] + alpha * |V|)
//
// Training only adds (possibly fractional) counts.
class ToyCondModel : public SeqModel {
 public:
  explicit ToyCondModel(Vocabulary vocab, ToyModelConfig config = {});

  const Vocabulary& vocabulary() const override { return vocab_; }
  std::vector<double> next_dist(std::span<const TokenId> prefix,
                                std::span<const std::string> input) const override;

  const ToyModelConfig& config() const { return config_; }

  // Bucket of the sorted, de-duplicated input words (FNV-1a).
  std::uint32_t input_feature(std::span<const std::string> input) const;

  void observe(std::span<const TokenId> prefix, std::span<const std::string> input, TokenId target,
               double weight = 1.0);
  // Adds `weight * dist` as fractional counts at one step.
  void observe_dist(std::span<const TokenId> prefix, std::span<const std::string> input,
                    std::span<const double> dist, double weight = 1.0);
  // Hard counts for every step of `target` (which should end in EOS).
  void observe_sequence(std::span<const std::string> input, std::span<const TokenId> target,
                        double weight = 1.0);

  std::size_t table_size() const { return rows_.size(); }

  // Versioned JSON count table. Rows are written in key order, so equal
  // models serialize to identical bytes.
  std::string to_json() const;
  static ToyCondModel from_json(const std::string& text);
  void save(const std::string& path) const;
  static ToyCondModel load(const std::string& path);

  friend bool operator==(const ToyCondModel& a, const ToyCondModel& b);

 private:
  // Context token ids (BOS padded as UINT32_MAX) followed by the feature.
  using Key = std::vector<std::uint32_t>;
  struct Row {
    std::vector<double> counts;
    double total = 0.0;
    friend bool operator==(const Row&, const Row&) = default;
  };

  Key key_for(std::span<const TokenId> prefix, std::uint32_t feature) const;
  Row& row(const Key& key);

  Vocabulary vocab_;
  ToyModelConfig config_;
  std::map<Key, Row> rows_;
};

inline constexpr const char* kToyModelFormat = "amrkit-toy-model";
inline constexpr int kToyModelVersion = 1;

}  // namespace amrkit::kd
