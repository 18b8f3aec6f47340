#pragma once

#include <cstdint>

#include "harness/laws.hpp"

namespace convexval {

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  long fixtures = 0;
  std::deque<LawEntry> laws;
  bool pass = true;
};

SuiteResult finish_suite(const std::string& suite, std::uint64_t seed, long fixtures,
                         const CheckAccum& acc);

Json suite_result_to_json(const SuiteResult& r);

// Merges verify-report JSONs into one CSV, one row per (suite, law, fixture
// class). Reports may be single objects or arrays of them.
std::string reports_to_csv(const std::vector<Json>& reports);

}  // namespace convexval
