#ifndef NSJACK_POLYRING_HPP
#define NSJACK_POLYRING_HPP

#include <map>
#include <vector>

#include "nsjack/composition.hpp"
#include "nsjack/rational.hpp"

namespace nsjack {

using Monomial = std::vector<int>;

// Sparse multivariate polynomial over the rationals in a fixed number of
// variables. Zero coefficients are never stored; equality is termwise.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Poly(int n) : n_(n) {}
  Poly(int n, const Monomial& m, const Rational& c) : n_(n) {
    if (c != 0) terms_[m] = c;
  }

  static Poly zero(int n) { return Poly(n); }
  static Poly one(int n) { return Poly(n, Monomial(n, 0), 1); }
  static Poly variable(int n, int i);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  const Rational& coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Rational& c) { return lhs *= c; }
  friend Poly operator*(const Rational& c, Poly rhs) { return rhs *= c; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend bool operator==(const Poly& lhs, const Poly& rhs) {
    return lhs.n_ == rhs.n_ && lhs.terms_ == rhs.terms_;
  }

  // -1 for the zero polynomial, total degree if homogeneous, throws
  // NotHomogeneous otherwise.
  int homogeneous_degree() const;

 private:
  int n_;
  TermMap terms_;
};

Poly swap_vars(const Poly& f, int i, int p);
Poly permute_vars(const Poly& f, const Permutation& pi);  // z_i -> z_{pi(i)}
Poly partial_deriv(const Poly& f, int i);

// Exact quotient (f - s_{ip} f) / (z_i - z_p), computed termwise from the
// factorization of z_i^a z_p^b - z_i^b z_p^a.
Poly divided_difference(const Poly& f, int i, int p);

// The triangle-order-maximal exponent of a nonzero homogeneous polynomial.
// Incomparable maximal elements are resolved by taking the lexicographically
// greatest exponent vector.
Monomial leading_monomial_triangle(const Poly& f);

}  // namespace nsjack

#endif  // NSJACK_POLYRING_HPP
