#pragma once

// Subcommands of the yjunction tool. Each writes its report to `out`,
// diagnostics to `err`, and returns the process exit code.

#include <iosfwd>
#include <vector>

#include "yjunction/config.hpp"

namespace yjunction {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitConfigError = 2,
  kExitDegenerate = 3,
  kExitNoConvergence = 4,
};

int cmd_junction(const Config& cfg, std::ostream& out, std::ostream& err);
int cmd_ring(const Config& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const Config& cfg, std::ostream& out, std::ostream& err);
int cmd_find(const Config& cfg, std::ostream& out, std::ostream& err);
int cmd_check(const Config& cfg, std::ostream& out, std::ostream& err);

/// "%.17g" formatting, locale independent.
std::string format_double(double x);

inline constexpr const char* kCsvHeader =
    "k,abs2_A,abs2_B,abs2_C,abs2_D,abs2_E,abs2_F,re_A,im_A,re_F,im_F,degenerate";

void write_csv(const Spectrum& spectrum, std::ostream& out);

}  // namespace yjunction
