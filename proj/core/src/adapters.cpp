#include "amrkit/adapters.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#include "amrkit/errors.hpp"
#include "amrkit/seq_model.hpp"

namespace amrkit {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

}  // namespace

Embedding EmbeddingProvider::embed_one(const std::string& sentence, Lang lang) const {
  auto out = embed(std::span<const std::string>(&sentence, 1), lang);
  if (out.size() != 1 || !out[0]) throw AdapterError("embedding failed");
  return *out[0];
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("embedding dimensions differ");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  const double c = dot / (std::sqrt(na) * std::sqrt(nb));
  return std::clamp(c, -1.0, 1.0);
}

std::vector<std::optional<std::string>> StubTranslator::translate(
    std::span<const std::string> sentences, Lang /*from*/, Lang to) const {
  std::vector<std::optional<std::string>> out;
  out.reserve(sentences.size());
  const std::string tag = lower(lang_code(to)) + "_";
  for (const auto& s : sentences) {
    const auto words = kd::split_words(s);
    if (words.empty()) {
      out.emplace_back(std::nullopt);
      continue;
    }
    std::vector<std::string> result;
    for (const auto& w : words) {
      // Strip any language tag left from a previous hop.
      std::string base = w;
      if (base.size() > 3 && base[2] == '_' && parse_lang(base.substr(0, 2))) base = base.substr(3);
      if (to == Lang::kEN) {
        result.push_back(base);
      } else {
        const auto h = fnv1a(lower(base) + "|" + std::string(lang_code(to)));
        if (h % 100 < drop_percent_ && words.size() > 1) continue;
        result.push_back(tag + base);
      }
    }
    if (result.empty()) result.push_back(tag + words.front());
    out.emplace_back(kd::join_words(result));
  }
  return out;
}

std::vector<std::optional<Embedding>> StubEmbedder::embed(std::span<const std::string> sentences,
                                                          Lang) const {
  std::vector<std::optional<Embedding>> out;
  out.reserve(sentences.size());
  for (const auto& s : sentences) {
    Embedding v(dim_, 0.0);
    for (const auto& w : kd::split_words(s)) {
      const auto h = fnv1a(lower(w));
      v[h % dim_] += (h >> 63) != 0 ? -1.0 : 1.0;
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    if (norm > 0.0) {
      norm = std::sqrt(norm);
      for (double& x : v) x /= norm;
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<std::string> CommandAdapter::run(const std::string& args,
                                             std::span<const std::string> lines) const {
  namespace fs = std::filesystem;
  static std::atomic<unsigned long> counter{0};
  const fs::path dir = fs::temp_directory_path();
  const std::string stem = "amrkit-" + std::to_string(::getpid()) + "-" +
                           std::to_string(counter.fetch_add(1));
  const fs::path in_path = dir / (stem + ".in");
  const fs::path out_path = dir / (stem + ".out");
  {
    std::ofstream in(in_path);
    if (!in) throw AdapterError("cannot create adapter input file");
    for (auto line : lines) {
      for (char& c : line) {
        if (c == '\n' || c == '\r') c = ' ';
      }
      in << line << '\n';
    }
  }
  const std::string cmd = command_ + " " + args + " " + shell_quote(in_path.string()) + " " +
                          shell_quote(out_path.string());
  const int status = std::system(cmd.c_str());
  std::error_code ec;
  fs::remove(in_path, ec);
  if (status != 0) {
    fs::remove(out_path, ec);
    throw AdapterError("adapter command failed (status " + std::to_string(status) + "): " + cmd);
  }
  std::vector<std::string> out;
  {
    std::ifstream result(out_path);
    if (!result) throw AdapterError("adapter produced no output file");
    std::string line;
    while (std::getline(result, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      out.push_back(std::move(line));
    }
  }
  fs::remove(out_path, ec);
  if (out.size() != lines.size()) {
    throw AdapterError("adapter returned " + std::to_string(out.size()) + " lines for " +
                       std::to_string(lines.size()) + " inputs");
  }
  return out;
}

std::vector<std::optional<std::string>> CommandAdapter::translate(
    std::span<const std::string> sentences, Lang from, Lang to) const {
  const auto lines = run("translate " + std::string(lang_code(from)) + " " +
                             std::string(lang_code(to)),
                         sentences);
  std::vector<std::optional<std::string>> out;
  out.reserve(lines.size());
  for (const auto& l : lines) {
    if (l.rfind("!ERR", 0) == 0) out.emplace_back(std::nullopt);
    else out.emplace_back(l);
  }
  return out;
}

std::vector<std::optional<Embedding>> CommandAdapter::embed(std::span<const std::string> sentences,
                                                            Lang lang) const {
  const auto lines = run("embed " + std::string(lang_code(lang)), sentences);
  std::vector<std::optional<Embedding>> out;
  out.reserve(lines.size());
  for (const auto& l : lines) {
    if (l.rfind("!ERR", 0) == 0) {
      out.emplace_back(std::nullopt);
      continue;
    }
    std::istringstream ss(l);
    Embedding v;
    double x;
    while (ss >> x) v.push_back(x);
    if (!ss.eof() || v.empty()) {
      out.emplace_back(std::nullopt);
    } else {
      out.emplace_back(std::move(v));
    }
  }
  return out;
}

std::shared_ptr<const Translator> translator_from_env() {
  if (const char* cmd = std::getenv(kAdapterEnvVar); cmd != nullptr && *cmd != '\0') {
    return std::make_shared<CommandAdapter>(cmd);
  }
  return std::make_shared<StubTranslator>();
}

std::shared_ptr<const EmbeddingProvider> embedder_from_env() {
  if (const char* cmd = std::getenv(kAdapterEnvVar); cmd != nullptr && *cmd != '\0') {
    return std::make_shared<CommandAdapter>(cmd);
  }
  return std::make_shared<StubEmbedder>();
}

}  // namespace amrkit
