#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hweyl {

struct SuiteOptions {
  std::uint64_t seed = 20240917;
  // Replaces each suite's default degree bound when set.
  std::optional<unsigned> degree_cap;
  // Multiplies each suite's case counts (at least one case is always run).
  double count_scale = 1.0;
};

struct SuiteResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::size_t cases = 0;
  double seconds = 0;
  std::string detail;  // first failure, or a short summary
};

// Exhaustive and randomized agreement of mul_assoc with the rewriting oracle.
SuiteResult suite_oracle_equivalence(const SuiteOptions& opt);
// alpha(a)*(b*c) = (a*b)*alpha(c) over n in {1,2,3} and three twist patterns.
SuiteResult suite_hom_associativity(const SuiteOptions& opt);
// Shift = exponential, group law, sequential = simultaneous shifts.
SuiteResult suite_twist_laws(const SuiteOptions& opt);
// (y_l x_l)^3 star-associator vanishes iff k_l = 0, lowest term k_l x_l.
SuiteResult suite_power_associativity(const SuiteOptions& opt);
// reduce_to_scalar soundness.
SuiteResult suite_simplicity(const SuiteOptions& opt);
// Structural derivation test vs generator intertwining, plus Leibniz.
SuiteResult suite_derivations(const SuiteOptions& opt);
// build_iso accepted, multiplicative, invertible; separation when counts differ.
SuiteResult suite_isomorphisms(const SuiteOptions& opt);
// Relation/intertwine checker vs equation-set checker on valid and corrupted
// candidates.
SuiteResult suite_checker_agreement(const SuiteOptions& opt);
// Series specialization, order-0 terms, coefficient-wise hom-Lie identities.
SuiteResult suite_deformation(const SuiteOptions& opt);
// a*1 = 1*a = alpha(a); no other low-degree monomial is a weak identity.
SuiteResult suite_weak_unitality(const SuiteOptions& opt);

// All of the above in order; independent suites run concurrently.
std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt);

}  // namespace hweyl
