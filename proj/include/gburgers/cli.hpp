#pragma once

#include <string>

#include "gburgers/runfile.hpp"

namespace gburgers::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

/// Full command-line entry point; maps errors to the exit codes above.
/// Subcommands: solve <runfile>, table <1|2|3|4>, converge <runfile>,
/// each accepting --out <path>.
int run_cli(int argc, const char* const* argv);

/// One solve; writes `t,x_star,w_numeric,w_exact,abs_error` rows per snapshot
/// time per collocation point (exact columns left empty when no closed form).
void cmd_solve(const RunFile& rf, const std::string& out_path);

/// Re-run one of the four built-in benchmark configurations and write the
/// computed norms next to the stored reference values.
void cmd_table(int table, const std::string& out_path);

/// Resolution sweep; writes one convergence row per requested level.
void cmd_converge(const RunFile& rf, const std::string& out_path);

}  // namespace gburgers::cli
