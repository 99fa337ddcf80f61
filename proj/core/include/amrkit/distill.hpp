#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amrkit/corpus.hpp"
#include "amrkit/noise.hpp"
#include "amrkit/seq_model.hpp"
#include "amrkit/toy_model.hpp"

namespace amrkit::kd {

// x is what the student reads, x_star what the teacher reads (the clean
// English sentence). `target` ends with EOS when present.
struct KdRecord {
  Sentence student_input;
  Sentence teacher_input;
  std::optional<std::vector<TokenId>> target;
};

struct KdBatch {
  std::vector<KdRecord> records;
};

enum class Objective { kMle, kTokenKd, kSeqKd, kTokPlusSeq };

std::string_view objective_name(Objective o);
std::optional<Objective> parse_objective(std::string_view s);

struct TrainOptions {
  const SeqModel* teacher = nullptr;  // required by every objective but mle
  std::size_t beam_size = 5;
  std::size_t max_len = 32;
  std::size_t epochs = 1;
  double token_weight = 1.0;  // weight of the token-level term
};

// One update per record per epoch, applied to the count table:
//   mle         hard counts along `target`
//   token_kd    teacher step distributions as fractional counts along `target`
//   seq_kd      hard counts along the teacher's beam mode for x_star
//   tok_plus_seq  seq_kd plus the token-level term along that mode
// Throws std::invalid_argument when a record lacks a field its objective
// needs or the teacher vocabulary differs from the student's.
ToyCondModel train(ToyCondModel model, std::span<const KdBatch> batches, Objective objective,
                   const TrainOptions& options = {});

struct SeqKdOptions {
  std::size_t beam_size = 5;
  std::size_t max_len = 64;
  std::size_t jobs = 1;
  std::string id_prefix = "kd-";
};

struct SeqKdSkip {
  std::size_t index = 0;
  std::string reason;
};

struct SeqKdResult {
  std::vector<CorpusRecord> records;  // input order, skipped entries omitted
  std::vector<SeqKdSkip> skipped;
};

// Builds sequence-level KD data. For each English sentence the target is
// the repaired top beam hypothesis of the teacher and the source is the
// noised sentence. Records carry provenance seq-kd, the original English
// in meta["en"] and the noise in meta["noise"]. Sentences the MT adapter
// fails on are skipped.
SeqKdResult seq_kd_build(const SeqModel& teacher, std::span<const std::string> english,
                         const NoiseSpec& noise, const SeqKdOptions& options = {});

// Output vocabulary covering every target token, in first-seen order.
Vocabulary vocabulary_from_records(std::span<const CorpusRecord> records);

// Toy teacher fitted by MLE on the records that carry a target.
ToyCondModel train_toy_parser(std::span<const CorpusRecord> records, ToyModelConfig config = {},
                              std::size_t epochs = 1);

}  // namespace amrkit::kd
