#include "nsjack/jack.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

namespace nsjack {

Poly cherednik_apply(int i, const Poly& f, const Rational& alpha) {
  const int n = f.nvars();
  assert(i >= 0 && i < n);
  Poly zi = Poly::variable(n, i);
  Poly out = alpha * (zi * partial_deriv(f, i));
  for (int p = 0; p < n; ++p) {
    if (p == i) continue;
    const Poly factor = (p < i) ? zi : Poly::variable(n, p);
    out += factor * divided_difference(f, i, p);
  }
  out += Rational(-i) * f;
  return out;
}

Poly phi_raise(const Poly& f) {
  const int n = f.nvars();
  Poly out(n);
  Monomial pm(n);
  for (const auto& [m, c] : f.terms()) {
    for (int j = 0; j + 1 < n; ++j) pm[j] = m[j + 1];
    pm[n - 1] = m[0] + 1;
    out.add_term(pm, c);
  }
  return out;
}

Poly symmetrize(const Poly& f) {
  const int n = f.nvars();
  Permutation pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  Poly out(n);
  do {
    out += permute_vars(f, pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

Poly elementary_symmetric(int n, int p) {
  assert(p >= 0 && p <= n);
  Poly out(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != static_cast<unsigned>(p)) continue;
    Monomial m(n, 0);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) m[i] = 1;
    out.add_term(m, 1);
  }
  return out;
}

const Poly& JackTable::generate(const Composition& eta) {
  assert(static_cast<int>(eta.size()) == n_);
  auto it = entries_.find(eta);
  if (it != entries_.end()) return it->second;

  Poly result(n_);
  if (weight(eta) == 0) {
    result = Poly::one(n_);
  } else {
    // Smallest descent first; otherwise eta is weakly increasing with a
    // positive last part and comes from the raising step.
    int descent = -1;
    for (int i = 0; i + 1 < n_; ++i) {
      if (eta[i] > eta[i + 1]) {
        descent = i;
        break;
      }
    }
    if (descent >= 0) {
      const Composition mu = s_action(eta, descent);  // mu_i < mu_{i+1}
      const Poly& emu = generate(mu);
      const Rational delta = delta_bar(mu, descent, alpha_);
      if (delta == 0)
        throw AlphaSingular("delta_bar vanishes at " + format_composition(mu));
      result = swap_vars(emu, descent, descent + 1) - (1 / delta) * emu;
    } else {
      result = phi_raise(generate(phi_inverse(eta)));
    }
  }
  return entries_.emplace(eta, std::move(result)).first->second;
}

const Poly& JackTable::symmetric_P(const Composition& kappa) {
  assert(is_partition(kappa));
  auto it = symmetric_.find(kappa);
  if (it != symmetric_.end()) return it->second;

  Poly sym = symmetrize(generate(kappa));
  Monomial lead(kappa.begin(), kappa.end());
  const Rational c = sym.coeff(lead);
  if (c == 0)
    throw std::logic_error("zero leading coefficient in symmetrization of " +
                           format_composition(kappa));
  sym *= 1 / c;
  return symmetric_.emplace(kappa, std::move(sym)).first->second;
}

void JackTable::fill(int max_weight) {
  for (const auto& eta : compositions_up_to_weight(n_, max_weight))
    generate(eta);
}

}  // namespace nsjack
