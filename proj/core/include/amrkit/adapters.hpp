#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amrkit/lang.hpp"

namespace amrkit {

using Embedding = std::vector<double>;

// Machine translation backend. One output per input; std::nullopt marks a
// per-sentence failure.
class Translator {
 public:
  virtual ~Translator() = default;
  virtual std::vector<std::optional<std::string>> translate(std::span<const std::string> sentences,
                                                            Lang from, Lang to) const = 0;
};

// Sentence embedding backend; pure in (sentence, lang).
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::vector<std::optional<Embedding>> embed(std::span<const std::string> sentences,
                                                      Lang lang) const = 0;
  Embedding embed_one(const std::string& sentence, Lang lang) const;
};

// Cosine similarity; 0 when either vector is zero. Throws
// std::invalid_argument on a dimension mismatch.
double cosine(std::span<const double> a, std::span<const double> b);

// Deterministic hash-based pseudo-translation used for hermetic runs.
// EN -> X tags each word with the language code ("de_house") and drops
// words whose hash falls under `drop_percent`; X -> EN strips the tags.
// Back-translation therefore loses exactly the dropped words. Empty input
// sentences fail.
class StubTranslator : public Translator {
 public:
  explicit StubTranslator(unsigned drop_percent = 12) : drop_percent_(drop_percent) {}
  std::vector<std::optional<std::string>> translate(std::span<const std::string> sentences,
                                                    Lang from, Lang to) const override;

 private:
  unsigned drop_percent_;
};

// Signed feature hashing of lower-cased words into `dim` buckets, L2
// normalized. Language-independent.
class StubEmbedder : public EmbeddingProvider {
 public:
  explicit StubEmbedder(std::size_t dim = 64) : dim_(dim) {}
  std::vector<std::optional<Embedding>> embed(std::span<const std::string> sentences,
                                              Lang lang) const override;

 private:
  std::size_t dim_;
};

// External tool driven through a file protocol:
//   <cmd> translate <FROM> <TO> <in> <out>
//   <cmd> embed <LANG> <in> <out>
// Input files hold one sentence per line. Each output line answers the
// same input line: a translation, or space-separated floats for embed. A
// line starting with "!ERR" marks a per-sentence failure. A non-zero exit
// status or a line count mismatch throws AdapterError.
class CommandAdapter : public Translator, public EmbeddingProvider {
 public:
  explicit CommandAdapter(std::string command) : command_(std::move(command)) {}

  std::vector<std::optional<std::string>> translate(std::span<const std::string> sentences,
                                                    Lang from, Lang to) const override;
  std::vector<std::optional<Embedding>> embed(std::span<const std::string> sentences,
                                              Lang lang) const override;

 private:
  std::vector<std::string> run(const std::string& args, std::span<const std::string> lines) const;

  std::string command_;
};

inline constexpr const char* kAdapterEnvVar = "AMRKIT_ADAPTER_CMD";

// CommandAdapter when AMRKIT_ADAPTER_CMD is set, the stubs otherwise.
std::shared_ptr<const Translator> translator_from_env();
std::shared_ptr<const EmbeddingProvider> embedder_from_env();

}  // namespace amrkit
