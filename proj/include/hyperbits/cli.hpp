#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperbits/constants.hpp"

namespace hyperbits::cli {

inline constexpr const char* kVersion = "0.1.0";

// One invocation of a subcommand. trials == 0 runs on the input files;
// trials > 0 runs a seeded random sweep instead (convert has no sweep mode).
struct RunConfig {
  std::string command;              // convert | identity | ic | koenig
  std::vector<std::string> inputs;  // positional input paths (file mode)
  std::uint64_t seed = 1;
  long trials = 0;
  double tol = kCrossTol;
  std::string format = "json";      // json | csv
  std::string out;                  // report path; empty writes to out_stream
  int n = 2;                        // sweep register exponent (identity / ic)
  long dim = 3;                     // sweep hyperbit dimension
  std::vector<std::size_t> rows;    // ic file mode: audited rows (default: all but row 0)
};

// Exit status: 0 ok, 1 bound/identity finding, 2 invalid input, 3 infeasible
// postprocessing. The report goes to cfg.out when set, else to out_stream;
// diagnostics go to err_stream. A failed run writes no output files.
int run(const RunConfig& cfg, std::ostream& out_stream, std::ostream& err_stream);

// argv front end for run(); returns the process exit code.
int main_entry(int argc, const char* const* argv);

}  // namespace hyperbits::cli
