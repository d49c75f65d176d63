#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "linkinv/quotients.hpp"

namespace linkinv {

// Parsed command line. Exactly one command; index-like fields are 1-based to
// match the braid/presentation text syntax.
struct RunConfig {
  std::string command;            // alex | sweep | slope | homology | pi1 | reproduce-paper
  std::string format = "text";    // text | json

  // alex / pi1 input (one of)
  std::string braid_text;
  std::string presentation_text;

  // alex
  std::string route = "minor";    // minor | burau | closed-form
  std::vector<int> torus;         // closed form parameters {p, q}

  // sweep
  std::string family = "trefoil-fiber";  // trefoil-fiber | generic-cable
  int p_min = 1;
  int p_max = 5;
  bool three_component = false;

  // slope / homology
  std::string link_json;   // linking matrix [[...], ...]
  std::string m_json;      // fiber class [...]
  std::string gamma_json;  // linking vector of the curve [...]
  int component = 0;       // 1-based; 0 = every component

  // pi1
  std::string surgery;     // "1/p"
  bool family_mode = false;
  std::vector<std::string> targets;
  std::uint64_t budget = kDefaultHomBudget;
};

struct ParseOutcome {
  RunConfig config;
  bool help_requested = false;
  std::string help_text;
};

// Throws parse_error on malformed arguments. The enumeration budget defaults
// to LINKINV_HOM_BUDGET when that variable is set, overridden by --budget.
ParseOutcome parse_args(const std::vector<std::string>& args);

// Executes one parsed command, writing the report to `out`. Returns 0; domain
// failures surface as exceptions for run_cli to map.
int run(const RunConfig& config, std::ostream& out);

// Full entry point: parse, dispatch, and map errors to exit codes
// (0 success/help, 1 domain errors, 2 parse errors).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linkinv
