#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amrkit/lang.hpp"
#include "amrkit/linearize.hpp"

namespace amrkit {

enum class Split { kTrain, kDev, kTest };
enum class Provenance { kGold, kSilverMt, kSeqKd };

std::string_view split_name(Split s);
std::optional<Split> parse_split(std::string_view s);
std::string_view provenance_name(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view s);

// One JSONL line:
//   {"id", "lang", "split", "src", "tgt", "provenance", "quality", "meta"}
// `tgt` is a space-joined linearization or null; `quality` is the filter
// score or null; `meta` maps strings to strings (e.g. "en" holds the
// original English of a translated record).
struct CorpusRecord {
  std::string id;
  Lang lang = Lang::kEN;
  Split split = Split::kTrain;
  std::string src;
  std::optional<LinearSeq> tgt;
  Provenance provenance = Provenance::kGold;
  std::optional<double> quality;
  std::map<std::string, std::string> meta;

  friend bool operator==(const CorpusRecord&, const CorpusRecord&) = default;
};

// Throws FormatError when a record breaks the corpus invariants: gold
// training records must be English and carry a target; quality, when
// present, lies in [-1, 1].
void validate_record(const CorpusRecord& r);

std::string to_jsonl_line(const CorpusRecord& r);
CorpusRecord from_jsonl_line(std::string_view line);

std::vector<CorpusRecord> read_jsonl(std::istream& in);
std::vector<CorpusRecord> read_jsonl(const std::string& path);
void write_jsonl(std::ostream& out, std::span<const CorpusRecord> records);
void write_jsonl(const std::string& path, std::span<const CorpusRecord> records);

}  // namespace amrkit
