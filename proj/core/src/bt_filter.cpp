#include "amrkit/bt_filter.hpp"

#include <map>

namespace amrkit {

FilterResult bt_filter(std::span<const CorpusRecord> records, const EmbeddingProvider& provider,
                       const Translator& back_translator, double threshold) {
  std::vector<CorpusRecord> scored(records.begin(), records.end());
  std::map<Lang, std::vector<std::size_t>> by_lang;
  for (std::size_t i = 0; i < scored.size(); ++i) {
    auto& r = scored[i];
    r.quality.reset();
    if (r.lang == Lang::kEN) {
      r.meta["filter_error"] = "source is already English";
    } else if (!r.meta.count("en")) {
      r.meta["filter_error"] = "no original English in meta";
    } else {
      by_lang[r.lang].push_back(i);
    }
  }

  for (const auto& [lang, idx] : by_lang) {
    std::vector<std::string> src, original;
    for (std::size_t i : idx) {
      src.push_back(scored[i].src);
      original.push_back(scored[i].meta.at("en"));
    }
    const auto bt = back_translator.translate(src, lang, Lang::kEN);
    std::vector<std::string> bt_text;
    std::vector<std::size_t> ok;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k < bt.size() && bt[k]) {
        bt_text.push_back(*bt[k]);
        ok.push_back(k);
      } else {
        scored[idx[k]].meta["filter_error"] = "back-translation failed";
      }
    }
    std::vector<std::string> orig_ok;
    for (std::size_t k : ok) orig_ok.push_back(original[k]);
    const auto e_orig = provider.embed(orig_ok, Lang::kEN);
    const auto e_bt = provider.embed(bt_text, Lang::kEN);
    for (std::size_t j = 0; j < ok.size(); ++j) {
      auto& r = scored[idx[ok[j]]];
      r.meta["bt"] = bt_text[j];
      if (j >= e_orig.size() || j >= e_bt.size() || !e_orig[j] || !e_bt[j]) {
        r.meta["filter_error"] = "embedding failed";
        continue;
      }
      r.quality = cosine(*e_orig[j], *e_bt[j]);
    }
  }
  return apply_threshold(scored, threshold);
}

FilterResult apply_threshold(std::span<const CorpusRecord> records, double threshold) {
  FilterResult out;
  for (const auto& r : records) {
    if (r.quality && *r.quality >= threshold) {
      out.kept.push_back(r);
    } else {
      out.dropped.push_back(r);
    }
  }
  return out;
}

}  // namespace amrkit
