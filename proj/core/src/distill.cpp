#include "amrkit/distill.hpp"

#include <map>
#include <stdexcept>
#include <unordered_set>

#include "amrkit/beam_search.hpp"
#include "amrkit/parallel.hpp"
#include "amrkit/repair.hpp"

namespace amrkit::kd {

std::string_view objective_name(Objective o) {
  switch (o) {
    case Objective::kMle: return "mle";
    case Objective::kTokenKd: return "token_kd";
    case Objective::kSeqKd: return "seq_kd";
    case Objective::kTokPlusSeq: return "tok_plus_seq";
  }
  return "mle";
}

std::optional<Objective> parse_objective(std::string_view s) {
  for (Objective o : {Objective::kMle, Objective::kTokenKd, Objective::kSeqKd,
                      Objective::kTokPlusSeq}) {
    if (objective_name(o) == s) return o;
  }
  return std::nullopt;
}

namespace {

void add_token_term(ToyCondModel& student, const SeqModel& teacher, const KdRecord& r,
                    std::span<const TokenId> y, double weight) {
  for (std::size_t t = 0; t < y.size(); ++t) {
    const auto q = teacher.next_dist(y.first(t), r.teacher_input);
    student.observe_dist(y.first(t), r.student_input, q, weight);
  }
}

}  // namespace

ToyCondModel train(ToyCondModel model, std::span<const KdBatch> batches, Objective objective,
                   const TrainOptions& options) {
  const bool needs_teacher = objective != Objective::kMle;
  if (needs_teacher) {
    if (!options.teacher) throw std::invalid_argument("objective requires a teacher");
    if (!(options.teacher->vocabulary() == model.vocabulary())) {
      throw std::invalid_argument("teacher and student vocabularies differ");
    }
  }
  // Validate up front so a bad record never leaves a half-trained model.
  for (const auto& batch : batches) {
    for (const auto& r : batch.records) {
      const bool needs_target = objective == Objective::kMle || objective == Objective::kTokenKd;
      if (needs_target && !r.target) throw std::invalid_argument("record has no target");
      if (r.target && (r.target->empty() || r.target->back() != model.vocabulary().eos())) {
        throw std::invalid_argument("target must end with EOS");
      }
    }
  }

  // Teacher modes are fixed, so each distinct x_star is decoded once.
  std::map<Sentence, std::vector<TokenId>> modes;
  auto mode_for = [&](const Sentence& x_star) -> const std::vector<TokenId>& {
    auto it = modes.find(x_star);
    if (it == modes.end()) {
      auto beam = beam_search(*options.teacher, x_star, options.beam_size, options.max_len);
      it = modes.emplace(x_star, std::move(beam.front().tokens)).first;
    }
    return it->second;
  };

  for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
    for (const auto& batch : batches) {
      for (const auto& r : batch.records) {
        switch (objective) {
          case Objective::kMle:
            model.observe_sequence(r.student_input, *r.target);
            break;
          case Objective::kTokenKd:
            add_token_term(model, *options.teacher, r, *r.target, options.token_weight);
            break;
          case Objective::kSeqKd:
            model.observe_sequence(r.student_input, mode_for(r.teacher_input));
            break;
          case Objective::kTokPlusSeq: {
            const auto& y = mode_for(r.teacher_input);
            model.observe_sequence(r.student_input, y);
            add_token_term(model, *options.teacher, r, y, options.token_weight);
            break;
          }
        }
      }
    }
  }
  return model;
}

SeqKdResult seq_kd_build(const SeqModel& teacher, std::span<const std::string> english,
                         const NoiseSpec& noise, const SeqKdOptions& options) {
  const auto noised = apply_noise(noise, english);
  const Lang lang = noise.kind == NoiseKind::kMtAdapter ? noise.target : Lang::kEN;
  const std::string noise_label = noise.describe();
  const Vocabulary& vocab = teacher.vocabulary();

  std::vector<std::optional<CorpusRecord>> built(english.size());
  parallel_for(english.size(), options.jobs, [&](std::size_t i) {
    if (!noised[i]) return;
    const auto x_star = split_words(english[i]);
    auto beam = beam_search(teacher, x_star, options.beam_size, options.max_len);
    const auto tokens = vocab.decode(beam.front().tokens);
    auto fixed = repair_with_report(tokens);

    CorpusRecord r;
    r.id = options.id_prefix + std::to_string(i);
    r.lang = lang;
    r.split = Split::kTrain;
    r.src = *noised[i];
    r.tgt = std::move(fixed.seq);
    r.provenance = Provenance::kSeqKd;
    r.meta["en"] = english[i];
    r.meta["noise"] = noise_label;
    if (noise.kind == NoiseKind::kWordDelete) r.meta["noise_seed"] = std::to_string(*noise.seed);
    r.meta["repaired"] = fixed.report.clean() ? "false" : "true";
    built[i] = std::move(r);
  });

  SeqKdResult result;
  for (std::size_t i = 0; i < built.size(); ++i) {
    if (built[i]) {
      result.records.push_back(std::move(*built[i]));
    } else {
      result.skipped.push_back({i, "translation failed"});
    }
  }
  return result;
}

Vocabulary vocabulary_from_records(std::span<const CorpusRecord> records) {
  std::vector<std::string> tokens;
  std::unordered_set<std::string> seen{std::string(Vocabulary::kEos)};
  for (const auto& r : records) {
    if (!r.tgt) continue;
    for (const auto& t : r.tgt->tokens) {
      if (seen.insert(t).second) tokens.push_back(t);
    }
  }
  return Vocabulary(std::move(tokens));
}

ToyCondModel train_toy_parser(std::span<const CorpusRecord> records, ToyModelConfig config,
                              std::size_t epochs) {
  ToyCondModel model(vocabulary_from_records(records), config);
  KdBatch batch;
  for (const auto& r : records) {
    if (!r.tgt) continue;
    auto y = model.vocabulary().encode(r.tgt->tokens);
    y.push_back(model.vocabulary().eos());
    const auto x = split_words(r.src);
    batch.records.push_back({x, x, std::move(y)});
  }
  return train(std::move(model), std::span<const KdBatch>(&batch, 1), Objective::kMle,
               {.epochs = epochs});
}

}  // namespace amrkit::kd
