#ifndef NSC_VERIFICATION_HPP
#define NSC_VERIFICATION_HPP

#include <string>
#include <vector>

namespace nsc {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string note;  // optional observation, e.g. extremum character
};

// Deterministic invariant grids. Each returns one entry per named check with
// the worst observed error; a suite passes iff every entry passed.
std::vector<CheckResult> verify_algebra();
std::vector<CheckResult> verify_theorem1();
std::vector<CheckResult> verify_lemma1();
std::vector<CheckResult> verify_lemma2();
std::vector<CheckResult> verify_closed_forms();
std::vector<CheckResult> verify_superstatistics();
std::vector<CheckResult> verify_all();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace nsc

#endif
