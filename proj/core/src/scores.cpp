#include "amrkit/scores.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

namespace amrkit {

std::string_view lang_code(Lang lang) {
  switch (lang) {
    case Lang::kEN: return "EN";
    case Lang::kDE: return "DE";
    case Lang::kES: return "ES";
    case Lang::kIT: return "IT";
    case Lang::kZH: return "ZH";
  }
  return "??";
}

std::string_view lang_name(Lang lang) {
  switch (lang) {
    case Lang::kEN: return "English";
    case Lang::kDE: return "German";
    case Lang::kES: return "Spanish";
    case Lang::kIT: return "Italian";
    case Lang::kZH: return "Chinese";
  }
  return "Unknown";
}

std::optional<Lang> parse_lang(std::string_view code) {
  std::string upper(code);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (Lang l : kAllLangs) {
    if (lang_code(l) == upper) return l;
  }
  return std::nullopt;
}

double round_half_away(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  double scaled = value * scale;
  scaled += std::copysign(1e-9 * std::max(1.0, std::fabs(scaled)), scaled);
  return std::round(scaled) / scale;
}

ScoreRow make_score_row(std::string name, const std::array<std::optional<double>, 5>& scores) {
  ScoreRow row{std::move(name), scores, std::nullopt, std::nullopt};
  double foreign = 0.0;
  bool foreign_complete = true;
  for (std::size_t i = 0; i < 4; ++i) {
    if (scores[i]) foreign += *scores[i];
    else foreign_complete = false;
  }
  if (foreign_complete) {
    row.avg_x = foreign / 4.0;
    if (scores[4]) row.avg = (foreign + *scores[4]) / 5.0;
  }
  return row;
}

std::string render_score_table(std::span<const ScoreRow> rows) {
  std::size_t name_width = 5;
  for (const auto& r : rows) name_width = std::max(name_width, r.name.size());
  auto cell = [](const std::optional<double>& v) {
    char buf[32];
    if (v) std::snprintf(buf, sizeof buf, "%7.1f", round_half_away(*v, 1));
    else std::snprintf(buf, sizeof buf, "%7s", "-");
    return std::string(buf);
  };
  std::string out = "Model" + std::string(name_width - 5, ' ');
  for (Lang l : kScoreColumns) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%7s", std::string(lang_code(l)).c_str());
    out += buf;
  }
  out += "  AVG_X    AVG\n";
  for (const auto& r : rows) {
    out += r.name + std::string(name_width - r.name.size(), ' ');
    for (const auto& s : r.scores) out += cell(s);
    out += cell(r.avg_x);
    out += cell(r.avg);
    out += '\n';
  }
  return out;
}

}  // namespace amrkit
