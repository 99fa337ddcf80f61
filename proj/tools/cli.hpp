#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace amrkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Runs one `amrkit` invocation. `args` excludes the program name. Reports
// and tables go to `out`; usage text and per-record diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace amrkit::cli
