#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grouplogic {

/// Parsed command-line run. One command per invocation; tolerances positive.
struct RunConfig {
  std::string command;          // validate | decohere | sorkin-audit | ...
  std::string groupoid_source;  // builtin spec or file path
  std::string lambda_spec;      // "", "uniform" or csv
  std::string haar_spec;        // "", counting, normalized or file path
  std::string phase_spec;       // "", potential:... or file path
  std::string subset_a, subset_b, subset_c;
  std::string family;           // ';'-separated subset list for decohere
  double tolerance = 1e-12;
  std::string format = "text";  // text | json
  int jobs = 0;
  std::string convolution = "haar";  // haar | literal
  bool bridge = false;               // decohere: also print the state-side route
};

/// Runs one CLI invocation. Returns the process exit code:
/// 0 success, 1 tolerance exceeded, 2 input/axiom error,
/// 3 measure/phase validation error, 4 resource cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace grouplogic
