#include "amrkit/toy_model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "amrkit/errors.hpp"
#include "json.hpp"

namespace amrkit::kd {

namespace {

constexpr std::uint32_t kBosPad = UINT32_MAX;

std::uint64_t fnv1a(std::string_view s, std::uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

ToyCondModel::ToyCondModel(Vocabulary vocab, ToyModelConfig config)
    : vocab_(std::move(vocab)), config_(config) {
  if (config_.order < 1) throw std::invalid_argument("n-gram order must be >= 1");
  if (!(config_.alpha > 0.0)) throw std::invalid_argument("smoothing alpha must be > 0");
  if (config_.buckets == 0) throw std::invalid_argument("bucket count must be > 0");
}

std::uint32_t ToyCondModel::input_feature(std::span<const std::string> input) const {
  std::vector<std::string> bag(input.begin(), input.end());
  std::sort(bag.begin(), bag.end());
  bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& w : bag) {
    h = fnv1a(w, h);
    h = fnv1a("\x1f", h);
  }
  return static_cast<std::uint32_t>(h % config_.buckets);
}

ToyCondModel::Key ToyCondModel::key_for(std::span<const TokenId> prefix,
                                        std::uint32_t feature) const {
  const std::size_t ctx = config_.order - 1;
  Key key(ctx + 1, kBosPad);
  for (std::size_t i = 0; i < ctx; ++i) {
    // key[ctx-1] is the most recent token.
    if (i < prefix.size()) key[ctx - 1 - i] = prefix[prefix.size() - 1 - i];
  }
  key[ctx] = feature;
  return key;
}

ToyCondModel::Row& ToyCondModel::row(const Key& key) {
  Row& r = rows_[key];
  if (r.counts.empty()) r.counts.assign(vocab_.size(), 0.0);
  return r;
}

std::vector<double> ToyCondModel::next_dist(std::span<const TokenId> prefix,
                                            std::span<const std::string> input) const {
  const std::size_t v = vocab_.size();
  std::vector<double> dist(v, 1.0 / static_cast<double>(v));
  auto it = rows_.find(key_for(prefix, input_feature(input)));
  if (it == rows_.end()) return dist;
  const Row& r = it->second;
  const double denom = r.total + config_.alpha * static_cast<double>(v);
  for (std::size_t i = 0; i < v; ++i) dist[i] = (r.counts[i] + config_.alpha) / denom;
  return dist;
}

void ToyCondModel::observe(std::span<const TokenId> prefix, std::span<const std::string> input,
                           TokenId target, double weight) {
  if (target >= vocab_.size()) throw std::out_of_range("target token id out of range");
  Row& r = row(key_for(prefix, input_feature(input)));
  r.counts[target] += weight;
  r.total += weight;
}

void ToyCondModel::observe_dist(std::span<const TokenId> prefix,
                                std::span<const std::string> input, std::span<const double> dist,
                                double weight) {
  if (dist.size() != vocab_.size()) throw std::invalid_argument("distribution size mismatch");
  Row& r = row(key_for(prefix, input_feature(input)));
  for (std::size_t i = 0; i < dist.size(); ++i) {
    r.counts[i] += weight * dist[i];
    r.total += weight * dist[i];
  }
}

void ToyCondModel::observe_sequence(std::span<const std::string> input,
                                    std::span<const TokenId> target, double weight) {
  const std::uint32_t feature = input_feature(input);
  for (std::size_t t = 0; t < target.size(); ++t) {
    if (target[t] >= vocab_.size()) throw std::out_of_range("target token id out of range");
    Row& r = row(key_for(target.first(t), feature));
    r.counts[target[t]] += weight;
    r.total += weight;
  }
}

bool operator==(const ToyCondModel& a, const ToyCondModel& b) {
  return a.vocab_ == b.vocab_ && a.config_.order == b.config_.order &&
         a.config_.alpha == b.config_.alpha && a.config_.buckets == b.config_.buckets &&
         a.rows_ == b.rows_;
}

std::string ToyCondModel::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = kToyModelFormat;
  j["version"] = kToyModelVersion;
  j["order"] = config_.order;
  j["alpha"] = config_.alpha;
  j["buckets"] = config_.buckets;
  j["vocab"] = vocab_.tokens();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [key, r] : rows_) {
    nlohmann::ordered_json row;
    nlohmann::ordered_json context = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i + 1 < key.size(); ++i) {
      if (key[i] == kBosPad) context.push_back(std::string(Vocabulary::kBos));
      else context.push_back(vocab_.token(key[i]));
    }
    row["context"] = std::move(context);
    row["feature"] = key.back();
    row["total"] = r.total;
    // Sparse counts: [token index, count] pairs.
    auto counts = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < r.counts.size(); ++i) {
      if (r.counts[i] != 0.0) counts.push_back({i, r.counts[i]});
    }
    row["counts"] = std::move(counts);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump() + "\n";
}

ToyCondModel ToyCondModel::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("model file is not JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != kToyModelFormat) {
      throw FormatError("not an amrkit toy model file");
    }
    const int version = j.at("version").get<int>();
    if (version != kToyModelVersion) {
      throw FormatError("unsupported toy model version " + std::to_string(version));
    }
    ToyModelConfig cfg;
    cfg.order = j.at("order").get<std::size_t>();
    cfg.alpha = j.at("alpha").get<double>();
    cfg.buckets = j.at("buckets").get<std::uint32_t>();
    ToyCondModel model(Vocabulary(j.at("vocab").get<std::vector<std::string>>()), cfg);
    for (const auto& row : j.at("rows")) {
      Key key;
      for (const auto& tok : row.at("context")) {
        const auto s = tok.get<std::string>();
        key.push_back(s == Vocabulary::kBos ? kBosPad : model.vocab_.id(s));
      }
      if (key.size() + 1 != cfg.order) throw FormatError("context length does not match order");
      key.push_back(row.at("feature").get<std::uint32_t>());
      Row& r = model.row(key);
      for (const auto& cell : row.at("counts")) {
        const auto i = cell.at(0).get<std::size_t>();
        const auto c = cell.at(1).get<double>();
        if (i >= r.counts.size()) throw FormatError("count index out of range");
        r.counts[i] += c;
      }
      r.total = row.at("total").get<double>();
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed toy model: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("malformed toy model: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw FormatError(std::string("malformed toy model: ") + e.what());
  }
}

void ToyCondModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << to_json();
}

ToyCondModel ToyCondModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

}  // namespace amrkit::kd
