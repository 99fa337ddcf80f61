#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "amrkit/adapters.hpp"
#include "amrkit/augment_vocab.hpp"
#include "amrkit/bt_filter.hpp"
#include "amrkit/corpus.hpp"
#include "amrkit/corpus_smatch.hpp"
#include "amrkit/corpus_stats.hpp"
#include "amrkit/distill.hpp"
#include "amrkit/errors.hpp"
#include "amrkit/linearize.hpp"
#include "amrkit/noise.hpp"
#include "amrkit/penman.hpp"
#include "amrkit/repair.hpp"
#include "amrkit/scores.hpp"
#include "amrkit/toy_model.hpp"
#include "json.hpp"

namespace amrkit::cli {

namespace {

using json = nlohmann::ordered_json;

// Semantic usage problems CLI11 cannot express (e.g. a seed required only
// for some noise kinds).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 1;
  std::string format = "json";
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// Writes to `path`, or to `out` when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot write " + path);
  f << text;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string jsonl_text(std::span<const CorpusRecord> records) {
  std::ostringstream ss;
  write_jsonl(ss, records);
  return ss.str();
}

json graph_to_json(const AmrGraph& g) {
  json j;
  const auto id = g.metadata().get("id");
  j["id"] = id ? json(*id) : json(nullptr);
  j["root"] = g.root();
  j["metadata"] = g.metadata().lines();
  json nodes = json::array();
  for (const auto& n : g.nodes()) {
    nodes.push_back({{"id", n.id},
                     {"label", n.label},
                     {"kind", n.is_variable() ? "variable" : "constant"}});
  }
  j["nodes"] = nodes;
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({{"src", e.src}, {"label", e.label}, {"tgt", e.tgt}});
  j["edges"] = edges;
  return j;
}

AmrGraph graph_from_json(const std::string& line) {
  try {
    const json j = json::parse(line);
    std::vector<Node> nodes;
    for (const auto& n : j.at("nodes")) {
      const std::string kind = n.at("kind");
      if (kind != "variable" && kind != "constant") throw FormatError("bad node kind " + kind);
      nodes.push_back({n.at("id"), n.at("label"),
                       kind == "variable" ? NodeKind::kVariable : NodeKind::kConstant});
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at("src"), e.at("label"), e.at("tgt")});
    std::vector<std::string> meta;
    if (j.contains("metadata")) meta = j.at("metadata").get<std::vector<std::string>>();
    return AmrGraph(std::move(nodes), std::move(edges), j.at("root"), Metadata(std::move(meta)));
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad graph JSON: ") + e.what());
  }
}

std::string repair_report_json(const RepairReport& r) {
  json j;
  j["parens_added"] = r.parens_added;
  j["parens_dropped"] = r.parens_dropped;
  j["segments_removed"] = r.segments_removed;
  j["concepts_inserted"] = r.concepts_inserted;
  j["variables_inserted"] = r.variables_inserted;
  j["variables_renumbered"] = r.variables_renumbered;
  return j.dump();
}

std::vector<CorpusRecord> read_records(const std::vector<std::string>& paths) {
  std::vector<CorpusRecord> all;
  for (const auto& p : paths) {
    auto part = read_jsonl(p);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return all;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

Lang lang_arg(const std::string& code) {
  const auto l = parse_lang(code);
  if (!l) throw UsageError("unknown language '" + code + "'");
  return *l;
}

std::string fmt(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

// ---- subcommands ----------------------------------------------------------

struct ParseArgs {
  std::string in, out;
};

int cmd_parse(const ParseArgs& a, const Globals& g, std::ostream& out) {
  const auto graphs = read_amr_file(a.in);
  std::string text;
  if (g.format == "table") {
    text = "graphs " + std::to_string(graphs.size()) + "\n";
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto& gr = graphs[i];
      text += std::to_string(i) + "\t" + gr.metadata().get("id").value_or("-") + "\tnodes " +
              std::to_string(gr.nodes().size()) + "\tedges " + std::to_string(gr.edges().size()) +
              "\n";
    }
  } else {
    for (const auto& gr : graphs) text += graph_to_json(gr).dump() + "\n";
  }
  emit(a.out, text, out);
  return kExitOk;
}

struct SerializeArgs {
  std::string in, out;
};

int cmd_serialize(const SerializeArgs& a, std::ostream& out) {
  std::vector<AmrGraph> graphs;
  for (const auto& line : read_lines(a.in)) {
    if (!line.empty()) graphs.push_back(graph_from_json(line));
  }
  std::ostringstream ss;
  write_amr_file(ss, graphs);
  emit(a.out, ss.str(), out);
  return kExitOk;
}

struct LinearizeArgs {
  std::string in, out;
};

int cmd_linearize(const LinearizeArgs& a, std::ostream& out) {
  std::string text;
  for (const auto& gr : read_amr_file(a.in)) text += linearize(gr).str() + "\n";
  emit(a.out, text, out);
  return kExitOk;
}

struct DelinearizeArgs {
  std::string in, out;
};

int cmd_delinearize(const DelinearizeArgs& a, std::ostream& out) {
  std::vector<LinearSeq> seqs;
  if (ends_with(a.in, ".jsonl")) {
    for (const auto& r : read_jsonl(a.in)) {
      if (!r.tgt) throw FormatError("record " + r.id + " has no target");
      seqs.push_back(*r.tgt);
    }
  } else {
    for (const auto& line : read_lines(a.in)) seqs.push_back(LinearSeq::parse(line));
  }
  std::vector<AmrGraph> graphs;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    try {
      graphs.push_back(delinearize(seqs[i]));
    } catch (const InvalidLinearization& e) {
      throw InvalidLinearization("line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  std::ostringstream ss;
  write_amr_file(ss, graphs);
  emit(a.out, ss.str(), out);
  return kExitOk;
}

struct RepairArgs {
  std::string in, out, report;
};

int cmd_repair(const RepairArgs& a, const Globals& g, std::ostream& out) {
  std::string text;
  RepairReport total;
  std::size_t n = 0, changed = 0, fallbacks = 0;
  json per_line = json::array();
  for (const auto& line : read_lines(a.in)) {
    ++n;
    const auto tokens = LinearSeq::parse(line).tokens;
    const auto fixed = repair_with_report(tokens);
    text += fixed.seq.str() + "\n";
    if (!fixed.report.clean()) {
      ++changed;
      if (fixed.report.fallback) ++fallbacks;
      json entry = json::parse(repair_report_json(fixed.report));
      entry["line"] = n;
      entry["fallback"] = fixed.report.fallback;
      per_line.push_back(entry);
    }
    total += fixed.report;
  }
  emit(a.out, text, out);

  json report;
  report["lines"] = n;
  report["repaired"] = changed;
  report["fallback"] = fallbacks;
  report["totals"] = json::parse(repair_report_json(total));
  report["per_line"] = per_line;
  if (!a.report.empty()) emit(a.report, report.dump(2) + "\n", out);
  if (!a.out.empty()) {
    if (g.format == "table") {
      out << "lines " << n << "\nrepaired " << changed << "\nfallback " << fallbacks << "\n";
    } else {
      json summary = report;
      summary.erase("per_line");
      out << summary.dump() << "\n";
    }
  }
  return kExitOk;
}

struct SmatchArgs {
  std::string pred, gold, per_record, align = "position";
  std::size_t restarts = kDefaultRestarts;
};

int cmd_smatch(const SmatchArgs& a, const Globals& g, std::ostream& out) {
  const auto pred = read_amr_file(a.pred);
  const auto gold = read_amr_file(a.gold);
  CorpusSmatchOptions opt;
  opt.restarts = a.restarts;
  opt.seed = g.seed.value_or(0);
  opt.jobs = g.jobs;
  opt.alignment = a.align == "id" ? Alignment::kId : Alignment::kPosition;
  const auto rep = corpus_smatch(pred, gold, opt);

  if (!a.per_record.empty()) {
    std::string text;
    for (std::size_t i = 0; i < rep.records.size(); ++i) {
      const auto& r = rep.records[i];
      json j;
      j["index"] = i;
      j["id"] = i < rep.record_ids.size() ? rep.record_ids[i] : "";
      j["precision"] = r.precision;
      j["recall"] = r.recall;
      j["f1"] = r.f1;
      j["matched"] = r.matched;
      j["pred_total"] = r.pred_total;
      j["gold_total"] = r.gold_total;
      text += j.dump() + "\n";
    }
    emit(a.per_record, text, out);
  }

  if (g.format == "table") {
    out << "# seed " << opt.seed << "  restarts " << opt.restarts << "\n"
        << "records    " << rep.n_records << "\n"
        << "precision  " << fmt(rep.precision, 4) << "\n"
        << "recall     " << fmt(rep.recall, 4) << "\n"
        << "f1         " << fmt(rep.f1, 4) << "\n";
  } else {
    json j;
    j["seed"] = opt.seed;
    j["restarts"] = opt.restarts;
    j["precision"] = rep.precision;
    j["recall"] = rep.recall;
    j["f1"] = rep.f1;
    j["n_records"] = rep.n_records;
    j["matched"] = rep.matched;
    j["pred_total"] = rep.pred_total;
    j["gold_total"] = rep.gold_total;
    out << j.dump() << "\n";
  }
  return kExitOk;
}

struct DistillArgs {
  std::string teacher, inputs, noise = "none", out, lang = "DE";
  std::size_t beam = 5, max_len = 64;
};

NoiseSpec noise_from_args(const std::string& text, const std::string& lang, const Globals& g) {
  NoiseSpec spec;
  try {
    spec = NoiseSpec::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (spec.kind == NoiseKind::kWordDelete) {
    if (!g.seed) throw UsageError("--seed is required for word deletion noise");
    spec.seed = g.seed;
  }
  if (spec.kind == NoiseKind::kMtAdapter) {
    spec.target = lang_arg(lang);
    if (spec.target == Lang::kEN) throw UsageError("MT noise needs a non-English --lang");
    spec.adapter = translator_from_env();
  }
  return spec;
}

int cmd_distill(const DistillArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  if (a.beam == 0 || a.max_len == 0) throw UsageError("--beam and --max-len must be >= 1");
  const NoiseSpec spec = noise_from_args(a.noise, a.lang, g);
  const auto teacher = kd::ToyCondModel::load(a.teacher);
  std::vector<std::string> english;
  for (auto& line : read_lines(a.inputs)) {
    if (!line.empty()) english.push_back(std::move(line));
  }
  kd::SeqKdOptions opt;
  opt.beam_size = a.beam;
  opt.max_len = a.max_len;
  opt.jobs = g.jobs;
  const auto result = kd::seq_kd_build(teacher, english, spec, opt);
  for (const auto& s : result.skipped) {
    err << "skipped input " << s.index + 1 << ": " << s.reason << "\n";
  }
  emit(a.out, jsonl_text(result.records), out);

  std::size_t repaired = 0;
  for (const auto& r : result.records) repaired += r.meta.at("repaired") == "true";
  if (!a.out.empty()) {
    if (g.format == "table") {
      out << "# seed " << (g.seed ? std::to_string(*g.seed) : "-") << "  noise "
          << spec.describe() << "  beam " << a.beam << "\n"
          << "records  " << result.records.size() << "\nskipped  " << result.skipped.size()
          << "\nrepaired " << repaired << "\n";
    } else {
      json j;
      j["seed"] = g.seed ? json(*g.seed) : json(nullptr);
      j["noise"] = spec.describe();
      j["beam"] = a.beam;
      j["records"] = result.records.size();
      j["skipped"] = result.skipped.size();
      j["repaired"] = repaired;
      out << j.dump() << "\n";
    }
  }
  return kExitOk;
}

struct NoiseArgs {
  std::string in, out, noise;
  std::vector<std::string> langs{"DE"};
};

int cmd_noise(const NoiseArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  const auto records = read_jsonl(a.in);
  std::vector<std::size_t> english_idx;
  std::vector<std::string> english;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].lang == Lang::kEN) {
      english_idx.push_back(i);
      english.push_back(records[i].src);
    } else {
      err << "skipped " << records[i].id << ": source is not English\n";
    }
  }

  std::vector<CorpusRecord> produced;
  std::size_t failed = 0;
  std::string description;
  const NoiseKind kind = noise_from_args(a.noise, "DE", g).kind;
  const std::vector<std::string> langs =
      kind == NoiseKind::kMtAdapter ? a.langs : std::vector<std::string>{"DE"};
  for (const auto& code : langs) {
    const NoiseSpec spec = noise_from_args(a.noise, code, g);
    description += (description.empty() ? "" : ",") + spec.describe();
    const auto noised = apply_noise(spec, english);
    for (std::size_t k = 0; k < english_idx.size(); ++k) {
      const CorpusRecord& src = records[english_idx[k]];
      if (!noised[k]) {
        ++failed;
        err << "skipped " << src.id << ": translation failed\n";
        continue;
      }
      CorpusRecord r = src;
      r.src = *noised[k];
      r.quality.reset();
      r.meta["en"] = src.src;
      r.meta["noise"] = spec.describe();
      if (spec.kind == NoiseKind::kMtAdapter) {
        r.id = src.id + "." + lower(lang_code(spec.target));
        r.lang = spec.target;
        r.provenance = Provenance::kSilverMt;
      } else if (spec.kind == NoiseKind::kWordDelete) {
        r.meta["noise_seed"] = std::to_string(*spec.seed);
      }
      produced.push_back(std::move(r));
    }
  }
  emit(a.out, jsonl_text(produced), out);
  if (!a.out.empty()) {
    if (g.format == "table") {
      out << "# seed " << (g.seed ? std::to_string(*g.seed) : "-") << "  noise " << description
          << "\nrecords " << produced.size() << "\nfailed  " << failed << "\n";
    } else {
      json j;
      j["seed"] = g.seed ? json(*g.seed) : json(nullptr);
      j["noise"] = description;
      j["records"] = produced.size();
      j["failed"] = failed;
      out << j.dump() << "\n";
    }
  }
  return kExitOk;
}

struct FilterArgs {
  std::string in, out, dropped;
  double threshold = kDefaultFilterThreshold;
};

int cmd_filter(const FilterArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  const auto records = read_jsonl(a.in);
  const auto translator = translator_from_env();
  const auto embedder = embedder_from_env();
  const auto result = bt_filter(records, *embedder, *translator, a.threshold);
  std::size_t errors = 0;
  for (const auto& r : result.dropped) {
    auto it = r.meta.find("filter_error");
    if (it != r.meta.end()) {
      ++errors;
      err << "dropped " << r.id << ": " << it->second << "\n";
    }
  }
  emit(a.out, jsonl_text(result.kept), out);
  if (!a.dropped.empty()) emit(a.dropped, jsonl_text(result.dropped), out);
  if (!a.out.empty()) {
    if (g.format == "table") {
      out << "threshold " << a.threshold << "\nkept      " << result.kept.size()
          << "\ndropped   " << result.dropped.size() << "\nerrors    " << errors << "\n";
    } else {
      json j;
      j["threshold"] = a.threshold;
      j["kept"] = result.kept.size();
      j["dropped"] = result.dropped.size();
      j["errors"] = errors;
      out << j.dump() << "\n";
    }
  }
  return kExitOk;
}

struct VocabArgs {
  std::vector<std::string> in;
  std::string out;
  std::size_t min_count = kDefaultMinCount;
};

int cmd_vocab(const VocabArgs& a, const Globals& g, std::ostream& out) {
  std::vector<CorpusRecord> gold;
  for (auto& r : read_records(a.in)) {
    if (r.provenance == Provenance::kGold && r.split == Split::kTrain) gold.push_back(std::move(r));
  }
  const auto tokens = augment_vocab(gold, a.min_count);
  if (g.format == "json" && a.out.empty()) {
    json j;
    j["min_count"] = a.min_count;
    j["records"] = gold.size();
    j["tokens"] = tokens;
    out << j.dump() << "\n";
    return kExitOk;
  }
  std::string text;
  for (const auto& t : tokens) text += t + "\n";
  emit(a.out, text, out);
  return kExitOk;
}

struct StatsArgs {
  std::vector<std::string> in;
};

int cmd_stats(const StatsArgs& a, const Globals& g, std::ostream& out) {
  const auto stats = corpus_stats(read_records(a.in));
  out << (g.format == "table" ? stats.render_table() : stats.to_json() + "\n");
  return kExitOk;
}

struct ReportArgs {
  std::string scores, name = "model";
  std::vector<std::string> smatch;
};

std::array<std::optional<double>, 5> parse_scores(const std::string& csv) {
  std::array<std::optional<double>, 5> row;
  std::vector<std::string> cells;
  std::stringstream ss(csv);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (cells.size() != 5) throw UsageError("--scores needs five values in DE,ES,IT,ZH,EN order");
  for (std::size_t i = 0; i < 5; ++i) {
    if (cells[i] == "-" || cells[i].empty()) continue;
    std::size_t used = 0;
    try {
      row[i] = std::stod(cells[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != cells[i].size()) throw UsageError("bad score '" + cells[i] + "'");
  }
  return row;
}

int cmd_report(const ReportArgs& a, const Globals& g, std::ostream& out) {
  std::array<std::optional<double>, 5> scores;
  if (!a.scores.empty()) scores = parse_scores(a.scores);
  for (const auto& spec : a.smatch) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) throw UsageError("--smatch expects LANG=report.json");
    const Lang lang = lang_arg(spec.substr(0, eq));
    double f1 = 0.0;
    try {
      f1 = json::parse(read_text(spec.substr(eq + 1))).at("f1").get<double>();
    } catch (const json::exception& e) {
      throw FormatError(std::string("bad smatch report: ") + e.what());
    }
    for (std::size_t i = 0; i < kScoreColumns.size(); ++i) {
      if (kScoreColumns[i] == lang) scores[i] = 100.0 * f1;
    }
  }
  const ScoreRow row = make_score_row(a.name, scores);
  if (g.format == "table") {
    out << render_score_table(std::span<const ScoreRow>(&row, 1));
    return kExitOk;
  }
  auto rounded = [](const std::optional<double>& v) {
    return v ? json(round_half_away(*v, 1)) : json(nullptr);
  };
  json j;
  j["model"] = row.name;
  json cells = json::object();
  for (std::size_t i = 0; i < kScoreColumns.size(); ++i) {
    cells[std::string(lang_code(kScoreColumns[i]))] = rounded(row.scores[i]);
  }
  j["scores"] = cells;
  j["avg_x"] = rounded(row.avg_x);
  j["avg"] = rounded(row.avg);
  out << j.dump() << "\n";
  return kExitOk;
}

struct TrainArgs {
  std::vector<std::string> in;
  std::string out;
  kd::ToyModelConfig config;
  std::size_t epochs = 1;
};

int cmd_train(const TrainArgs& a, const Globals& g, std::ostream& out) {
  std::vector<CorpusRecord> train;
  for (auto& r : read_records(a.in)) {
    if (r.split == Split::kTrain && r.tgt) train.push_back(std::move(r));
  }
  if (train.empty()) throw FormatError("no training records with targets");
  const auto model = kd::train_toy_parser(train, a.config, a.epochs);
  model.save(a.out);
  if (g.format == "table") {
    out << "records " << train.size() << "\nvocab   " << model.vocabulary().size() << "\nrows    "
        << model.table_size() << "\n";
  } else {
    json j;
    j["records"] = train.size();
    j["vocab"] = model.vocabulary().size();
    j["rows"] = model.table_size();
    out << j.dump() << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"AMR graph toolkit: PENMAN I/O, linearization, Smatch, distillation data", "amrkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Random seed (required by randomized subcommands)");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"json", "table"}));

  ParseArgs parse_a;
  auto* parse = app.add_subcommand("parse", "Validate PENMAN graphs and dump them as JSON lines");
  parse->add_option("--in", parse_a.in, "AMR file")->required();
  parse->add_option("--out", parse_a.out, "Output file (default stdout)");

  SerializeArgs ser_a;
  auto* ser = app.add_subcommand("serialize", "Write JSON-line graphs (from parse) as PENMAN");
  ser->add_option("--in", ser_a.in, "Graph JSON lines")->required();
  ser->add_option("--out", ser_a.out, "Output AMR file (default stdout)");

  LinearizeArgs lin_a;
  auto* lin = app.add_subcommand("linearize", "PENMAN graphs to one linearization per line");
  lin->add_option("--in", lin_a.in, "AMR file")->required();
  lin->add_option("--out", lin_a.out, "Output file (default stdout)");

  DelinearizeArgs delin_a;
  auto* delin = app.add_subcommand("delinearize", "Linearizations (text, or tgt of a .jsonl corpus) to PENMAN");
  delin->add_option("--in", delin_a.in, "Linearization file")->required();
  delin->add_option("--out", delin_a.out, "Output AMR file (default stdout)");

  RepairArgs rep_a;
  auto* rep = app.add_subcommand("repair", "Repair predicted linearizations");
  rep->add_option("--in", rep_a.in, "Predicted linearizations")->required();
  rep->add_option("--out", rep_a.out, "Repaired output (default stdout)");
  rep->add_option("--report", rep_a.report, "Repair report JSON");

  SmatchArgs sm_a;
  auto* sm = app.add_subcommand("smatch", "Corpus Smatch between predicted and gold AMR files");
  sm->add_option("--pred", sm_a.pred, "Predicted AMR file")->required();
  sm->add_option("--gold", sm_a.gold, "Gold AMR file")->required();
  sm->add_option("--restarts", sm_a.restarts, "Random restarts per pair");
  sm->add_option("--per-record", sm_a.per_record, "Per-record scores (JSONL)");
  sm->add_option("--align", sm_a.align, "Pair records by position or ::id")
      ->check(CLI::IsMember({"position", "id"}));

  DistillArgs dis_a;
  auto* dis = app.add_subcommand("distill", "Build sequence-level KD data from a toy teacher");
  dis->add_option("--teacher", dis_a.teacher, "Toy model file")->required();
  dis->add_option("--inputs", dis_a.inputs, "English sentences, one per line")->required();
  dis->add_option("--noise", dis_a.noise, "none | mt | delete:K");
  dis->add_option("--lang", dis_a.lang, "Target language for mt noise");
  dis->add_option("--beam", dis_a.beam, "Beam size");
  dis->add_option("--max-len", dis_a.max_len, "Maximum decoding steps");
  dis->add_option("--out", dis_a.out, "KD corpus (JSONL, default stdout)");

  NoiseArgs noise_a;
  auto* noise = app.add_subcommand("noise", "Translate (mt) or mask (delete:K) English records");
  noise->add_option("--in", noise_a.in, "JSONL corpus")->required();
  noise->add_option("--noise", noise_a.noise, "mt | delete:K")->required();
  noise->add_option("--lang", noise_a.langs, "Target languages for mt")->delimiter(',');
  noise->add_option("--out", noise_a.out, "Output JSONL (default stdout)");

  FilterArgs fil_a;
  auto* fil = app.add_subcommand("filter", "Back-translation consistency filter");
  fil->add_option("--in", fil_a.in, "Translated JSONL corpus")->required();
  fil->add_option("--out", fil_a.out, "Kept records (default stdout)");
  fil->add_option("--dropped", fil_a.dropped, "Dropped records");
  fil->add_option("--threshold", fil_a.threshold, "Minimum cosine similarity")
      ->check(CLI::Range(-1.0, 1.0));

  VocabArgs voc_a;
  auto* voc = app.add_subcommand("vocab", "Frequent relations and frames of gold training data");
  voc->add_option("--in", voc_a.in, "JSONL corpus files")->required();
  voc->add_option("--min-count", voc_a.min_count, "Minimum frequency");
  voc->add_option("--out", voc_a.out, "One token per line");

  StatsArgs st_a;
  auto* st = app.add_subcommand("stats", "Instances per language and split");
  st->add_option("--in", st_a.in, "JSONL corpus files")->required();

  ReportArgs rp_a;
  auto* rp = app.add_subcommand("report", "Score row with AVG_X and AVG");
  rp->add_option("--scores", rp_a.scores, "DE,ES,IT,ZH,EN scores ('-' for missing)");
  rp->add_option("--smatch", rp_a.smatch, "LANG=smatch-report.json");
  rp->add_option("--name", rp_a.name, "Row label");

  TrainArgs tr_a;
  auto* tr = app.add_subcommand("train", "Fit a toy teacher on corpus targets (MLE)");
  tr->add_option("--in", tr_a.in, "JSONL corpus files")->required();
  tr->add_option("--out", tr_a.out, "Model file")->required();
  tr->add_option("--order", tr_a.config.order, "n-gram order")->check(CLI::PositiveNumber);
  tr->add_option("--alpha", tr_a.config.alpha, "Additive smoothing")->check(CLI::PositiveNumber);
  tr->add_option("--buckets", tr_a.config.buckets, "Input feature buckets")
      ->check(CLI::PositiveNumber);
  tr->add_option("--epochs", tr_a.epochs, "Passes over the data");

  std::vector<std::string> argv_store{"amrkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "amrkit: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (parse->parsed()) return cmd_parse(parse_a, g, out);
    if (ser->parsed()) return cmd_serialize(ser_a, out);
    if (lin->parsed()) return cmd_linearize(lin_a, out);
    if (delin->parsed()) return cmd_delinearize(delin_a, out);
    if (rep->parsed()) return cmd_repair(rep_a, g, out);
    if (sm->parsed()) return cmd_smatch(sm_a, g, out);
    if (dis->parsed()) return cmd_distill(dis_a, g, out, err);
    if (noise->parsed()) return cmd_noise(noise_a, g, out, err);
    if (fil->parsed()) return cmd_filter(fil_a, g, out, err);
    if (voc->parsed()) return cmd_vocab(voc_a, g, out);
    if (st->parsed()) return cmd_stats(st_a, g, out);
    if (rp->parsed()) return cmd_report(rp_a, g, out);
    if (tr->parsed()) return cmd_train(tr_a, g, out);
  } catch (const UsageError& e) {
    err << "amrkit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "amrkit: " << e.what() << "\n";
    return kExitData;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace amrkit::cli
