#ifndef NSJACK_ORACLE_HPP
#define NSJACK_ORACLE_HPP

#include <string>
#include <utility>
#include <vector>

#include "nsjack/jack.hpp"
#include "nsjack/subsets.hpp"

namespace nsjack {

// Brute-force verification side. Nothing here calls the closed-form
// coefficient code; the only shared dependencies are the polynomial ring and
// the E-generation, which the eigenvalue audit checks independently.

struct BasisExpansion {
  std::vector<std::pair<Composition, Rational>> terms;
  Poly residual;  // zero on success
};

// Expand a homogeneous polynomial in the E basis by repeatedly stripping the
// triangle-leading monomial. Throws NotInSpan if a nonzero residual survives.
BasisExpansion expand_in_E(const Poly& f, JackTable& table);

// expand_in_E of (prod_{i in S} z_i) * E_eta. Empty S is the identity.
BasisExpansion brute_pieri(const Composition& eta, const IndexSubset& S,
                           JackTable& table);

// expand_in_E of e_p * E_eta.
BasisExpansion brute_pieri_ep(const Composition& eta, int p, JackTable& table);

struct AuditReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Asserts xi_i E_eta = bar(eta)_i E_eta for every table entry and every i.
AuditReport eigen_audit(JackTable& table);

// Expansion of e_p * P_kappa in the P basis by dominance-triangular
// elimination on leading partition monomials.
std::vector<std::pair<Composition, Rational>> brute_symmetric(
    const Composition& kappa, int p, JackTable& table);

}  // namespace nsjack

#endif  // NSJACK_ORACLE_HPP
