#include "amrkit/corpus_smatch.hpp"

#include <unordered_map>

#include "amrkit/errors.hpp"
#include "amrkit/parallel.hpp"
#include "amrkit/random.hpp"

namespace amrkit {

CorpusReport aggregate(std::vector<SmatchResult> records) {
  CorpusReport report;
  for (const auto& r : records) {
    report.matched += r.matched;
    report.pred_total += r.pred_total;
    report.gold_total += r.gold_total;
  }
  const SmatchResult micro = make_smatch_result(report.matched, report.pred_total, report.gold_total);
  report.precision = micro.precision;
  report.recall = micro.recall;
  report.f1 = micro.f1;
  report.n_records = records.size();
  report.records = std::move(records);
  return report;
}

CorpusReport corpus_smatch(std::span<const AmrGraph> pred, std::span<const AmrGraph> gold,
                           const CorpusSmatchOptions& options) {
  if (pred.size() != gold.size()) {
    throw CountMismatch("prediction file has " + std::to_string(pred.size()) +
                        " records, gold has " + std::to_string(gold.size()));
  }
  const std::size_t n = gold.size();
  // pred_for[i] is the prediction paired with gold record i.
  std::vector<std::size_t> pred_for(n);
  std::vector<std::string> ids(n);
  for (std::size_t i = 0; i < n; ++i) {
    pred_for[i] = i;
    ids[i] = gold[i].metadata().get("id").value_or(std::to_string(i));
  }
  if (options.alignment == Alignment::kId) {
    std::unordered_map<std::string, std::size_t> by_id;
    for (std::size_t i = 0; i < n; ++i) {
      auto id = pred[i].metadata().get("id");
      if (!id) throw CountMismatch("prediction " + std::to_string(i + 1) + " has no ::id");
      if (!by_id.emplace(*id, i).second) throw CountMismatch("duplicate prediction id " + *id);
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto id = gold[i].metadata().get("id");
      if (!id) throw CountMismatch("gold record " + std::to_string(i + 1) + " has no ::id");
      auto it = by_id.find(*id);
      if (it == by_id.end()) throw CountMismatch("no prediction for id " + *id);
      pred_for[i] = it->second;
    }
  }

  std::vector<SmatchResult> results(n);
  parallel_for(n, options.jobs, [&](std::size_t i) {
    results[i] = smatch_hill_climb(pred[pred_for[i]], gold[i], options.restarts,
                                   derive_seed(options.seed, i));
  });
  CorpusReport report = aggregate(std::move(results));
  report.record_ids = std::move(ids);
  return report;
}

}  // namespace amrkit
