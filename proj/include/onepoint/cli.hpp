#ifndef ONEPOINT_CLI_HPP
#define ONEPOINT_CLI_HPP

#include <string>

namespace onepoint {

struct RunConfig {
  std::string command;              // invariants | guess | verify |
                                    // closure-demo | oracle | catalog
  std::string problem;              // catalog name or problem file path
  long d_max = 8;
  long g_max = 3;
  long order = 2;                   // R bound for guessing
  long degree = 3;                  // D bound for guessing
  long n = 25;                      // series length for guessing
  long buffer = 5;                  // held-out verification points
  std::string recursion_file;      // verify input
  std::string demo = "monotone";
  std::string oracle_kind;          // ribbon | monotone | dessin | bms
  long oracle_d = 3;
  long oracle_g = 0;
  long oracle_m = 3;
  std::string format = "table";     // json | table | pretty
};

struct RunResult {
  int status = 0;
  std::string output;
};

// Executes one command; deterministic output for a given config.  Errors
// surface as onepoint::Error with a module-tagged code.
RunResult run(const RunConfig& config);

}  // namespace onepoint

#endif
