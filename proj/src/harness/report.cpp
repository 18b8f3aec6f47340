#include "harness/report.hpp"

#include <cstdio>
#include <sstream>

namespace convexval {

namespace {

std::string rat_decimal(const Rat& q) {
  if (q == 0) return "0";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6e", rat_to_double(q));
  return buf;
}

Json law_entry_to_json(const LawEntry& e) {
  Json j;
  j["name"] = e.name;
  j["fixture_class"] = e.fixture_class;
  j["probes"] = e.probes;
  j["max_residual"] = e.all_exact ? "0" : rat_decimal(e.max_residual);
  j["tolerance"] = rat_decimal(e.tolerance);
  j["expected_violation"] = e.expect_violation;
  if (!e.monotone) j["monotone"] = false;
  j["pass"] = e.pass();
  if (e.witness) j["witness"] = *e.witness;
  return j;
}

}  // namespace

SuiteResult finish_suite(const std::string& suite, std::uint64_t seed, long fixtures,
                         const CheckAccum& acc) {
  SuiteResult r;
  r.suite = suite;
  r.seed = seed;
  r.fixtures = fixtures;
  r.laws = acc.entries();
  r.pass = acc.all_pass();
  return r;
}

Json suite_result_to_json(const SuiteResult& r) {
  Json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["fixtures"] = r.fixtures;
  j["pass"] = r.pass;
  j["laws"] = Json::array();
  for (const auto& e : r.laws) j["laws"].push_back(law_entry_to_json(e));
  return j;
}

namespace {

void csv_rows(const Json& report, std::ostringstream& out) {
  if (report.is_array()) {
    for (const auto& item : report) csv_rows(item, out);
    return;
  }
  if (!report.is_object() || !report.contains("laws")) return;
  const std::string suite = report.value("suite", std::string("?"));
  for (const auto& law : report.at("laws")) {
    out << suite << ',' << law.value("name", std::string("?")) << ','
        << law.value("fixture_class", std::string("?")) << ','
        << law.value("probes", 0L) << ',' << law.value("max_residual", std::string("?"))
        << ',' << law.value("tolerance", std::string("?")) << ','
        << (law.value("expected_violation", false) ? "yes" : "no") << ','
        << (law.value("pass", false) ? "pass" : "fail") << '\n';
  }
}

}  // namespace

std::string reports_to_csv(const std::vector<Json>& reports) {
  std::ostringstream out;
  out << "suite,law,fixture_class,probes,max_residual,tolerance,expected_violation,result\n";
  for (const auto& r : reports) csv_rows(r, out);
  return out.str();
}

}  // namespace convexval
