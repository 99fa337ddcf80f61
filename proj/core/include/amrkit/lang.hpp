#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace amrkit {

enum class Lang { kEN, kDE, kES, kIT, kZH };

inline constexpr std::array<Lang, 5> kAllLangs = {Lang::kEN, Lang::kDE, Lang::kES, Lang::kIT,
                                                  Lang::kZH};
// Languages without gold training data.
inline constexpr std::array<Lang, 4> kForeignLangs = {Lang::kDE, Lang::kES, Lang::kIT,
                                                      Lang::kZH};

std::string_view lang_code(Lang lang);
std::string_view lang_name(Lang lang);
// Case-insensitive code lookup ("de", "DE").
std::optional<Lang> parse_lang(std::string_view code);

}  // namespace amrkit
