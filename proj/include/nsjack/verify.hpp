#ifndef NSJACK_VERIFY_HPP
#define NSJACK_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "nsjack/rational.hpp"

namespace nsjack {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // first counterexample when failing
};

// The batch identity suite driven by `verify` and by the acceptance tests.
// Every check is exact; a failing check carries its first counterexample.
std::vector<CheckResult> run_verify(int n, const std::vector<Rational>& alphas,
                                    int max_weight);

// Prints one line per check; returns true iff all passed.
bool report_verify(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace nsjack

#endif  // NSJACK_VERIFY_HPP
