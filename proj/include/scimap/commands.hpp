#ifndef SCIMAP_COMMANDS_HPP
#define SCIMAP_COMMANDS_HPP

#include "scimap/run_config.hpp"

#include <ostream>

namespace scimap {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Each command runs the pipeline for `cfg`, writes its report to `out` and any
// stage-tagged error to `err`, and returns the process exit code.

int run_inspect(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_map(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_slice(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_factors(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace scimap

#endif
