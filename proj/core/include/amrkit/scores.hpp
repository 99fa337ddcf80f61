#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amrkit/lang.hpp"

namespace amrkit {

// Rounds half away from zero at `decimals` places. A relative nudge of
// 1e-9 absorbs binary representation error, so 53.05 rounds to 53.1.
double round_half_away(double value, int decimals);

// One row of a multilingual score table, columns DE ES IT ZH EN.
struct ScoreRow {
  std::string name;
  std::array<std::optional<double>, 5> scores;  // indexed in kScoreColumns order
  std::optional<double> avg_x;                  // mean over DE ES IT ZH, if all present
  std::optional<double> avg;                    // mean over all five, if all present
};

inline constexpr std::array<Lang, 5> kScoreColumns = {Lang::kDE, Lang::kES, Lang::kIT, Lang::kZH,
                                                      Lang::kEN};

ScoreRow make_score_row(std::string name, const std::array<std::optional<double>, 5>& scores);

// Fixed-width table with header `Model DE ES IT ZH EN AVG_X AVG`; missing
// cells print as '-'. Values are shown to one decimal.
std::string render_score_table(std::span<const ScoreRow> rows);

}  // namespace amrkit
