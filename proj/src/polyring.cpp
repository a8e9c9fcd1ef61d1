#include "nsjack/polyring.hpp"

#include <algorithm>
#include <cassert>

namespace nsjack {

Poly Poly::variable(int n, int i) {
  Monomial m(n, 0);
  m[i] = 1;
  return Poly(n, m, 1);
}

const Rational& Poly::coeff(const Monomial& m) const {
  static const Rational kZero = 0;
  auto it = terms_.find(m);
  return it == terms_.end() ? kZero : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& rhs) {
  assert(n_ == rhs.n_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  assert(n_ == rhs.n_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  assert(lhs.n_ == rhs.n_);
  Poly out(lhs.n_);
  Monomial m(lhs.n_);
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      for (int i = 0; i < lhs.n_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

int Poly::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  int deg = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (int e : m) d += e;
    if (deg == -1)
      deg = d;
    else if (d != deg)
      throw NotHomogeneous("mixed degrees " + std::to_string(deg) + " and " +
                           std::to_string(d));
  }
  return deg;
}

Poly swap_vars(const Poly& f, int i, int p) {
  Poly out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    Monomial sm = m;
    std::swap(sm[i], sm[p]);
    out.add_term(sm, c);
  }
  return out;
}

Poly permute_vars(const Poly& f, const Permutation& pi) {
  Poly out(f.nvars());
  Monomial pm(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    for (int i = 0; i < f.nvars(); ++i) pm[pi[i]] = m[i];
    out.add_term(pm, c);
  }
  return out;
}

Poly partial_deriv(const Poly& f, int i) {
  Poly out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    Monomial dm = m;
    --dm[i];
    out.add_term(dm, c * m[i]);
  }
  return out;
}

Poly divided_difference(const Poly& f, int i, int p) {
  assert(i != p);
  // Termwise: (z_i^a z_p^b - z_i^b z_p^a)/(z_i - z_p) expands as a signed
  // geometric block z_i^min z_p^min * sum z_i^k z_p^{|a-b|-1-k}.
  Poly out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    const int a = m[i], b = m[p];
    if (a == b) continue;
    const int lo = std::min(a, b), hi = std::max(a, b);
    const Rational sign = (a > b) ? c : -c;
    Monomial block = m;
    for (int k = 0; k < hi - lo; ++k) {
      block[i] = lo + k;
      block[p] = hi - 1 - k;
      out.add_term(block, sign);
    }
  }
  return out;
}

Monomial leading_monomial_triangle(const Poly& f) {
  if (f.is_zero()) throw NotHomogeneous("leading monomial of zero polynomial");
  f.homogeneous_degree();  // validates homogeneity
  // Keep the monomials not dominated by any other, then break ties by taking
  // the lexicographically greatest.
  Monomial best;
  for (const auto& [m, c] : f.terms()) {
    bool dominated = false;
    for (const auto& [other, c2] : f.terms()) {
      if (triangle_less(m, other)) {
        dominated = true;
        break;
      }
    }
    if (!dominated && (best.empty() || m > best)) best = m;
  }
  return best;
}

}  // namespace nsjack
