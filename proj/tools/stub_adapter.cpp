// Reference implementation of the adapter file protocol, backed by the
// built-in stub translator and embedder:
//
//   amrkit-stub-adapter translate FROM TO in.txt out.txt
//   amrkit-stub-adapter embed LANG in.txt out.txt
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "amrkit/adapters.hpp"

namespace {

int usage() {
  std::cerr << "usage: amrkit-stub-adapter translate FROM TO IN OUT\n"
               "       amrkit-stub-adapter embed LANG IN OUT\n";
  return 1;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) return usage();
  std::vector<std::string> out_lines;
  std::string out_path;
  if (args[0] == "translate" && args.size() == 5) {
    const auto from = amrkit::parse_lang(args[1]);
    const auto to = amrkit::parse_lang(args[2]);
    if (!from || !to) return usage();
    const auto result = amrkit::StubTranslator().translate(read_lines(args[3]), *from, *to);
    for (const auto& r : result) out_lines.push_back(r ? *r : "!ERR translation failed");
    out_path = args[4];
  } else if (args[0] == "embed" && args.size() == 4) {
    const auto lang = amrkit::parse_lang(args[1]);
    if (!lang) return usage();
    const auto result = amrkit::StubEmbedder().embed(read_lines(args[2]), *lang);
    for (const auto& r : result) {
      if (!r) {
        out_lines.push_back("!ERR embedding failed");
        continue;
      }
      std::string line;
      char buf[32];
      for (std::size_t i = 0; i < r->size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", (*r)[i]);
        line += (i ? " " : "") + std::string(buf);
      }
      out_lines.push_back(line);
    }
    out_path = args[3];
  } else {
    return usage();
  }
  std::ofstream out(out_path);
  if (!out) return 2;
  for (const auto& l : out_lines) out << l << '\n';
  return 0;
}
