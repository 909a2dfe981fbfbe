// One PASS/FAIL line per acceptance criterion. Suites run one after another
// so the wall-clock limits are measured without contention.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "hweyl/checks.hpp"

namespace {

struct Criterion {
  int number;
  hweyl::SuiteResult (*suite)(const hweyl::SuiteOptions&);
  double limit_seconds;  // 0: no limit
};

const Criterion kCriteria[] = {
    {1, hweyl::suite_oracle_equivalence, 30},   {2, hweyl::suite_hom_associativity, 60},
    {3, hweyl::suite_twist_laws, 0},            {4, hweyl::suite_power_associativity, 0},
    {5, hweyl::suite_simplicity, 0},            {6, hweyl::suite_derivations, 0},
    {7, hweyl::suite_isomorphisms, 0},          {8, hweyl::suite_checker_agreement, 0},
    {9, hweyl::suite_deformation, 60},          {10, hweyl::suite_weak_unitality, 0},
};

}  // namespace

int main(int argc, char** argv) {
  hweyl::SuiteOptions opt;
  if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  for (const auto& c : kCriteria) {
    hweyl::SuiteResult r = c.suite(opt);
    bool in_time = c.limit_seconds == 0 || r.seconds < c.limit_seconds;
    bool ok = r.passed && in_time;
    failed += !ok;
    std::string limit = c.limit_seconds == 0 ? "" : " (limit " + std::to_string(int(c.limit_seconds)) + " s)";
    std::printf("[%s] criterion %2d  %-60s %6zu cases  %7.2f s%s\n", ok ? "PASS" : "FAIL", c.number,
                r.title.c_str(), r.cases, r.seconds, limit.c_str());
    if (!ok) std::printf("       %s\n", in_time ? r.detail.c_str() : "time limit exceeded");
    std::fflush(stdout);
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
