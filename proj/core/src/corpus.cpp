#include "amrkit/corpus.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "amrkit/errors.hpp"
#include "json.hpp"

namespace amrkit {

using nlohmann::ordered_json;

std::string_view split_name(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kDev: return "dev";
    case Split::kTest: return "test";
  }
  return "train";
}

std::optional<Split> parse_split(std::string_view s) {
  if (s == "train") return Split::kTrain;
  if (s == "dev") return Split::kDev;
  if (s == "test") return Split::kTest;
  return std::nullopt;
}

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kGold: return "gold";
    case Provenance::kSilverMt: return "silver-mt";
    case Provenance::kSeqKd: return "seq-kd";
  }
  return "gold";
}

std::optional<Provenance> parse_provenance(std::string_view s) {
  if (s == "gold") return Provenance::kGold;
  if (s == "silver-mt") return Provenance::kSilverMt;
  if (s == "seq-kd") return Provenance::kSeqKd;
  return std::nullopt;
}

void validate_record(const CorpusRecord& r) {
  if (r.provenance == Provenance::kGold && r.split == Split::kTrain) {
    if (r.lang != Lang::kEN) {
      throw FormatError("record " + r.id + ": gold training records must be English");
    }
    if (!r.tgt) throw FormatError("record " + r.id + ": gold training record without target");
  }
  if (r.quality && !(std::fabs(*r.quality) <= 1.0)) {
    throw FormatError("record " + r.id + ": quality outside [-1, 1]");
  }
}

std::string to_jsonl_line(const CorpusRecord& r) {
  ordered_json j;
  j["id"] = r.id;
  j["lang"] = std::string(lang_code(r.lang));
  j["split"] = std::string(split_name(r.split));
  j["src"] = r.src;
  j["tgt"] = r.tgt ? ordered_json(r.tgt->str()) : ordered_json(nullptr);
  j["provenance"] = std::string(provenance_name(r.provenance));
  j["quality"] = r.quality ? ordered_json(*r.quality) : ordered_json(nullptr);
  ordered_json meta = ordered_json::object();
  for (const auto& [k, v] : r.meta) meta[k] = v;
  j["meta"] = std::move(meta);
  return j.dump();
}

CorpusRecord from_jsonl_line(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("corpus line is not a JSON object");
  try {
    CorpusRecord r;
    r.id = j.at("id").is_string() ? j.at("id").get<std::string>() : j.at("id").dump();
    auto lang = parse_lang(j.at("lang").get<std::string>());
    if (!lang) throw FormatError("unknown language '" + j.at("lang").get<std::string>() + "'");
    r.lang = *lang;
    if (j.contains("split") && !j["split"].is_null()) {
      auto split = parse_split(j["split"].get<std::string>());
      if (!split) throw FormatError("unknown split '" + j["split"].get<std::string>() + "'");
      r.split = *split;
    }
    r.src = j.at("src").get<std::string>();
    if (j.contains("tgt") && !j["tgt"].is_null()) {
      r.tgt = LinearSeq::parse(j["tgt"].get<std::string>());
    }
    auto prov = parse_provenance(j.at("provenance").get<std::string>());
    if (!prov) throw FormatError("unknown provenance '" + j.at("provenance").get<std::string>() + "'");
    r.provenance = *prov;
    if (j.contains("quality") && !j["quality"].is_null()) r.quality = j["quality"].get<double>();
    if (j.contains("meta") && j["meta"].is_object()) {
      for (const auto& [k, v] : j["meta"].items()) {
        r.meta[k] = v.is_string() ? v.get<std::string>() : v.dump();
      }
    }
    validate_record(r);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed corpus record: ") + e.what());
  }
}

std::vector<CorpusRecord> read_jsonl(std::istream& in) {
  std::vector<CorpusRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(from_jsonl_line(line));
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<CorpusRecord> read_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_jsonl(in);
}

void write_jsonl(std::ostream& out, std::span<const CorpusRecord> records) {
  for (const auto& r : records) out << to_jsonl_line(r) << '\n';
}

void write_jsonl(const std::string& path, std::span<const CorpusRecord> records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  write_jsonl(out, records);
}

}  // namespace amrkit
