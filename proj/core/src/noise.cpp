#include "amrkit/noise.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "amrkit/random.hpp"
#include "amrkit/scores.hpp"
#include "amrkit/seq_model.hpp"

namespace amrkit {

std::size_t masked_count(std::size_t n, double rate) {
  return static_cast<std::size_t>(round_half_away(rate * static_cast<double>(n), 0));
}

std::string word_delete(std::string_view sentence, double rate, std::uint64_t seed) {
  if (!(rate >= 0.0 && rate <= 1.0)) throw std::invalid_argument("rate must lie in [0, 1]");
  auto words = kd::split_words(sentence);
  const std::size_t k = masked_count(words.size(), rate);
  std::vector<std::size_t> idx(words.size());
  std::iota(idx.begin(), idx.end(), 0);
  Rng rng(seed);
  // Partial Fisher-Yates: the first k slots become a uniform k-subset.
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + uniform_index(rng, words.size() - i);
    std::swap(idx[i], idx[j]);
    words[idx[i]] = kMaskToken;
  }
  return kd::join_words(words);
}

NoiseSpec NoiseSpec::parse(std::string_view text) {
  NoiseSpec spec;
  if (text == "none") return spec;
  if (text == "mt") {
    spec.kind = NoiseKind::kMtAdapter;
    return spec;
  }
  if (text.rfind("delete:", 0) == 0) {
    const std::string pct(text.substr(7));
    std::size_t used = 0;
    double k = 0.0;
    try {
      k = std::stod(pct, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != pct.size()) {
      throw std::invalid_argument("bad word deletion percentage '" + pct + "'");
    }
    spec.kind = NoiseKind::kWordDelete;
    spec.rate = k / 100.0;
    if (!(spec.rate >= 0.0 && spec.rate <= 1.0)) {
      throw std::invalid_argument("word deletion percentage must lie in [0, 100]");
    }
    return spec;
  }
  throw std::invalid_argument("unknown noise '" + std::string(text) +
                              "' (expected none, mt, or delete:K)");
}

void NoiseSpec::validate() const {
  if (kind == NoiseKind::kWordDelete) {
    if (!(rate >= 0.0 && rate <= 1.0)) throw std::invalid_argument("rate must lie in [0, 1]");
    if (!seed) throw std::invalid_argument("word deletion requires a seed");
  }
  if (kind == NoiseKind::kMtAdapter && !adapter) {
    throw std::invalid_argument("MT noise requires a translation adapter");
  }
}

std::string NoiseSpec::describe() const {
  switch (kind) {
    case NoiseKind::kNone:
      return "none";
    case NoiseKind::kMtAdapter:
      return "mt:" + std::string(lang_code(target));
    case NoiseKind::kWordDelete: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "delete:%g", rate * 100.0);
      return buf;
    }
  }
  return "none";
}

std::vector<std::optional<std::string>> apply_noise(const NoiseSpec& spec,
                                                    std::span<const std::string> english,
                                                    std::uint64_t epoch) {
  spec.validate();
  std::vector<std::optional<std::string>> out;
  switch (spec.kind) {
    case NoiseKind::kNone:
      out.assign(english.begin(), english.end());
      break;
    case NoiseKind::kWordDelete: {
      out.reserve(english.size());
      const std::uint64_t base =
          spec.resample_per_epoch ? derive_seed(*spec.seed, 0x65706f6368ULL + epoch) : *spec.seed;
      for (std::size_t i = 0; i < english.size(); ++i) {
        out.emplace_back(word_delete(english[i], spec.rate, derive_seed(base, i)));
      }
      break;
    }
    case NoiseKind::kMtAdapter:
      out = spec.adapter->translate(english, Lang::kEN, spec.target);
      if (out.size() != english.size()) out.assign(english.size(), std::nullopt);
      break;
  }
  return out;
}

}  // namespace amrkit
