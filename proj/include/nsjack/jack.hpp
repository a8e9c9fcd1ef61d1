#ifndef NSJACK_JACK_HPP
#define NSJACK_JACK_HPP

#include <map>

#include "nsjack/composition.hpp"
#include "nsjack/polyring.hpp"

namespace nsjack {

// Memoized table of nonsymmetric Jack polynomials E_eta for a fixed (N, alpha),
// plus the symmetric P_kappa built from them. Entries are generated on demand
// through the swap / raising recurrences starting from E_{(0^N)} = 1.
class JackTable {
 public:
  JackTable(int n, Rational alpha) : n_(n), alpha_(std::move(alpha)) {}

  int nvars() const { return n_; }
  const Rational& alpha() const { return alpha_; }

  const Poly& generate(const Composition& eta);

  // Monic-in-m_kappa symmetric Jack polynomial; kappa must be a partition.
  const Poly& symmetric_P(const Composition& kappa);

  const std::map<Composition, Poly>& entries() const { return entries_; }

  // Generate every E_eta with |eta| <= max_weight.
  void fill(int max_weight);

  // Insert a parsed entry (cache import). The entry is trusted as-is.
  void insert(const Composition& eta, Poly value) {
    entries_.insert_or_assign(eta, std::move(value));
  }

 private:
  int n_;
  Rational alpha_;
  std::map<Composition, Poly> entries_;
  std::map<Composition, Poly> symmetric_;
};

// The i-th Cherednik operator applied to an arbitrary polynomial
// (0-based i): alpha z_i d/dz_i + divided-difference terms + (0 - i).
Poly cherednik_apply(int i, const Poly& f, const Rational& alpha);

// Phi f(z) = z_N f(z_N, z_1, ..., z_{N-1}); sends E_eta to E_{phi(eta)}.
Poly phi_raise(const Poly& f);

// Sum of f over all variable permutations.
Poly symmetrize(const Poly& f);

// e_p(z), the p-th elementary symmetric polynomial in n variables.
Poly elementary_symmetric(int n, int p);

}  // namespace nsjack

#endif  // NSJACK_JACK_HPP
