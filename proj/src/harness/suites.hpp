#pragma once

#include <optional>
#include <string>
#include <vector>

#include "harness/report.hpp"

namespace convexval {

// Shared knobs for every verification suite. count 0 means the suite's own
// default; tol overrides the acceptance tolerance of non-exact entries only
// (exact-zero demands stay exact).
struct SuiteConfig {
  int dim = 3;
  std::uint64_t seed = 0xC0FFEE;
  long count = 0;
  std::optional<Rat> tol;
  mpfr_prec_t prec = 128;
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Runs one named suite; throws InputError on an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace convexval
