#include "nsjack/pieri.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "nsjack/oracle.hpp"

namespace nsjack {

namespace {

Rational factor_a(const Rational& x, const Rational& y, const Rational& alpha) {
  if (x == y) throw AlphaSingular("a(x,y) pole: x == y");
  return 1 / (alpha * (x - y));
}

Rational factor_b(const Rational& x, const Rational& y, const Rational& alpha) {
  if (x == y) throw AlphaSingular("b(x,y) pole: x == y");
  return (x - y - 1 / alpha) / (x - y);
}

}  // namespace

CoefficientKernel kernel_at(const std::vector<Rational>& x,
                            const IndexSubset& I, const Rational& alpha) {
  assert(!I.empty());
  const int n = static_cast<int>(x.size());
  const int s = static_cast<int>(I.size());
  CoefficientKernel k;

  k.A = factor_a(x[I[s - 1]] - 1, x[I[0]], alpha);
  for (int u = 0; u + 1 < s; ++u) k.A *= factor_a(x[I[u]], x[I[u + 1]], alpha);

  // B: gaps after each cycle index, the tail weight, and the prefix against
  // x_{t_s}-1.
  k.B = x[I[s - 1]] + Rational(n - 1) / alpha;
  for (int u = 0; u < s; ++u) {
    const int hi = (u + 1 < s) ? I[u + 1] : n;
    for (int j = I[u] + 1; j < hi; ++j) k.B *= factor_b(x[I[u]], x[j], alpha);
  }
  for (int j = 0; j < I[0]; ++j) k.B *= factor_b(x[I[s - 1]] - 1, x[j], alpha);

  // Btilde: gaps before each cycle index, then the tail against x_{t_1}+1
  // and its weight factor. Bhat is a hook-ratio rescaling of Btilde that
  // needs the composition behind x, so kernel() fills it in.
  Rational gaps = 1;
  for (int u = 0; u < s; ++u) {
    const int lo = (u == 0) ? 0 : I[u - 1] + 1;
    for (int j = lo; j < I[u]; ++j) gaps *= factor_b(x[I[u]], x[j], alpha);
  }
  k.Btilde = gaps * (x[I[0]] + 1 + Rational(n - 1) / alpha);
  for (int j = I[s - 1] + 1; j < n; ++j)
    k.Btilde *= factor_b(x[I[0]] + 1, x[j], alpha);
  k.Bhat = 0;

  for (int u = 0; u < s; ++u) {
    const int i = I[u];
    k.chi[i] = (u == 0) ? Rational(alpha * (x[I[s - 1]] - x[i] - 1))
                        : Rational(alpha * (x[I[u - 1]] - x[i]));
    k.chi_tilde[i] = (u == s - 1)
                         ? Rational(alpha * (x[i] - x[I[0]] - 1))
                         : Rational(alpha * (x[i] - x[I[u + 1]]));
  }
  return k;
}

CoefficientKernel kernel(const Composition& eta, const IndexSubset& I,
                         const Rational& alpha) {
  auto x = eta_bar(eta, alpha);
  for (auto& v : x) v /= alpha;
  CoefficientKernel k = kernel_at(x, I, alpha);
  k.Bhat = alpha * hooks(eta, alpha).e_prime /
           hooks(c_I(eta, I), alpha).e_prime * k.Btilde;
  return k;
}

Rational coeff_p1(const Composition& eta, int i, const Composition& nu,
                  const Rational& alpha) {
  for (const auto& I : maximal_sets(eta)) {
    if (!std::binary_search(I.begin(), I.end(), i)) continue;
    if (c_I(eta, I) != nu) continue;
    const CoefficientKernel k = kernel(eta, I, alpha);
    const HookData he = hooks(eta, alpha);
    const HookData hn = hooks(nu, alpha);
    return (he.d_prime * hn.e_prime) / (hn.d_prime * he.e_prime) *
           k.chi_tilde.at(i) * k.A * k.Bhat;
  }
  return 0;
}

PieriExpansion expand_z_i(const Composition& eta, int i,
                          const Rational& alpha) {
  PieriExpansion out{eta, "z_" + std::to_string(i + 1), {}};
  const HookData he = hooks(eta, alpha);
  for (const auto& I : maximal_sets(eta)) {
    if (!std::binary_search(I.begin(), I.end(), i)) continue;
    const Composition nu = c_I(eta, I);
    const CoefficientKernel k = kernel(eta, I, alpha);
    const HookData hn = hooks(nu, alpha);
    const Rational c = (he.d_prime * hn.e_prime) /
                       (hn.d_prime * he.e_prime) * k.chi_tilde.at(i) * k.A *
                       k.Bhat;
    if (c != 0) out.terms.emplace_back(nu, c);
  }
  std::sort(out.terms.begin(), out.terms.end());
  return out;
}

PieriExpansion expand_e1(const Composition& eta, const Rational& alpha) {
  PieriExpansion out{eta, "e_1", {}};
  const HookData he = hooks(eta, alpha);
  for (const auto& I : maximal_sets(eta)) {
    const Composition nu = c_I(eta, I);
    const CoefficientKernel k = kernel(eta, I, alpha);
    const HookData hn = hooks(nu, alpha);
    const Rational c =
        -alpha * alpha * he.d_prime * k.A * k.Btilde / hn.d_prime;
    if (c != 0) out.terms.emplace_back(nu, c);
  }
  std::sort(out.terms.begin(), out.terms.end());
  return out;
}

namespace {

// Shared core of the p = N-1 coefficients: the selector chi at bar(eta)/alpha
// and A at either point (they agree there), but Bhat at bar(nu)/alpha, where
// nu = hat_c_I(eta). Multiplied by e_eta d_nu / (d_eta e_nu).
Rational pN1_core(const Composition& eta, const IndexSubset& I,
                  const Composition& nu, const Rational& alpha,
                  const Rational& chi_j1) {
  const CoefficientKernel keta = kernel(eta, I, alpha);
  const CoefficientKernel knu = kernel(nu, I, alpha);
  const HookData he = hooks(eta, alpha);
  const HookData hn = hooks(nu, alpha);
  return (he.e * hn.d) / (he.d * hn.e) * chi_j1 * keta.A * knu.Bhat;
}

}  // namespace

Rational coeff_pN1(const Composition& eta, int j1, const Composition& nu,
                   const Rational& alpha) {
  for (const auto& I : hat_maximal_sets(eta)) {
    if (!std::binary_search(I.begin(), I.end(), j1)) continue;
    if (hat_c_I(eta, I) != nu) continue;
    const CoefficientKernel keta = kernel(eta, I, alpha);
    return pN1_core(eta, I, nu, alpha, keta.chi.at(j1));
  }
  return 0;
}

PieriExpansion expand_z_except(const Composition& eta, int j1,
                               const Rational& alpha) {
  PieriExpansion out{eta, "prod z_j, j != " + std::to_string(j1 + 1), {}};
  for (const auto& I : hat_maximal_sets(eta)) {
    if (!std::binary_search(I.begin(), I.end(), j1)) continue;
    const Composition nu = hat_c_I(eta, I);
    const CoefficientKernel keta = kernel(eta, I, alpha);
    const Rational c = pN1_core(eta, I, nu, alpha, keta.chi.at(j1));
    if (c != 0) out.terms.emplace_back(nu, c);
  }
  std::sort(out.terms.begin(), out.terms.end());
  return out;
}

PieriExpansion expand_eN1(const Composition& eta, const Rational& alpha) {
  const int n = static_cast<int>(eta.size());
  PieriExpansion out{eta, "e_" + std::to_string(n - 1), {}};
  for (const auto& I : hat_maximal_sets(eta)) {
    const Composition nu = hat_c_I(eta, I);
    const Rational c = pN1_core(eta, I, nu, alpha, Rational(-alpha));
    if (c != 0) out.terms.emplace_back(nu, c);
  }
  std::sort(out.terms.begin(), out.terms.end());
  return out;
}

namespace {

Rational prime_ratio(const Composition& from, const Composition& to,
                     const Rational& alpha) {
  // d'_to e'_from / (d'_from e'_to)
  const HookData hf = hooks(from, alpha);
  const HookData ht = hooks(to, alpha);
  return (ht.d_prime * hf.e_prime) / (hf.d_prime * ht.e_prime);
}

class Engine {
 public:
  Engine(int n, Rational alpha) : n_(n), alpha_(std::move(alpha)) {}

  const EngineCoeffs& coeffs(const Composition& eta) {
    auto it = memo_.find(eta);
    if (it != memo_.end()) return it->second;
    EngineCoeffs result;
    if (weight(eta) == 0) {
      result = initial();
    } else {
      int descent = -1;
      for (int i = 0; i + 1 < n_; ++i) {
        if (eta[i] > eta[i + 1]) {
          descent = i;
          break;
        }
      }
      result = (descent >= 0) ? swap_step(eta, descent) : raise_step(eta);
    }
    return memo_.emplace(eta, std::move(result)).first->second;
  }

  EngineTable table(int max_weight) {
    EngineTable out;
    for (const auto& eta : compositions_up_to_weight(n_, max_weight))
      out.emplace(eta, coeffs(eta));
    return out;
  }

 private:
  // z_i expanded over the single-box compositions: coefficient 1 on the box
  // in row i, -1/(alpha+j) on each box strictly below.
  EngineCoeffs initial() const {
    EngineCoeffs out;
    for (int j = 0; j < n_; ++j) {
      Composition nu(n_, 0);
      nu[j] = 1;
      std::vector<Rational> c(n_, 0);
      for (int i = 0; i < n_; ++i) {
        if (j == i)
          c[i] = 1;
        else if (j > i)
          c[i] = -1 / (alpha_ + j);
      }
      out.emplace(std::move(nu), std::move(c));
    }
    return out;
  }

  EngineCoeffs raise_step(const Composition& eta) {
    const Composition mu = phi_inverse(eta);
    EngineCoeffs out;
    for (const auto& [nu, c] : coeffs(mu)) {
      std::vector<Rational> shifted(n_);
      for (int j = 0; j < n_; ++j) shifted[j] = c[(j + 1) % n_];
      out.emplace(phi_action(nu), std::move(shifted));
    }
    return out;
  }

  EngineCoeffs swap_step(const Composition& eta, int i) {
    const Composition mu = s_action(eta, i);  // mu_i < mu_{i+1}
    const auto& cmu = coeffs(mu);

    std::map<Composition, std::vector<Rational>> alpha_mu;
    for (const auto& [nu, c] : cmu) {
      std::vector<Rational> at(n_);
      const Rational ratio = prime_ratio(mu, nu, alpha_);
      for (int j = 0; j < n_; ++j) at[j] = ratio * c[j];
      alpha_mu.emplace(nu, std::move(at));
    }
    const std::vector<Rational> zeros(n_, 0);
    auto tilde = [&](const Composition& nu) -> const std::vector<Rational>& {
      auto it = alpha_mu.find(nu);
      return it == alpha_mu.end() ? zeros : it->second;
    };

    std::vector<Composition> candidates;
    for (const auto& [nu, c] : cmu) {
      candidates.push_back(nu);
      candidates.push_back(s_action(nu, i));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    const Rational dmu = delta_bar(mu, i, alpha_);
    if (dmu == 0 || dmu == -1)
      throw AlphaSingular("swap-step denominator vanishes at " +
                          format_composition(mu));
    const Rational inv_dmu = 1 / dmu;

    EngineCoeffs out;
    for (const auto& nu : candidates) {
      const Rational dnu = delta_bar(nu, i, alpha_);
      if (dnu == 0)
        throw AlphaSingular("target delta vanishes at " +
                            format_composition(nu));
      const Rational inv_dnu = 1 / dnu;
      const auto& t_nu = tilde(nu);
      const auto& t_snu = tilde(s_action(nu, i));

      std::vector<Rational> at(n_);
      for (int j = 0; j < n_; ++j) {
        Rational rhs;
        if (j != i && j != i + 1) {
          rhs = (1 - inv_dnu) * t_snu[j] + (inv_dnu - inv_dmu) * t_nu[j];
        } else if (j == i + 1) {
          rhs = (1 - inv_dnu) * t_snu[i] + inv_dnu * t_nu[i] -
                inv_dmu * t_nu[i + 1];
        } else {
          rhs = (1 - inv_dnu) * t_snu[i + 1] + inv_dnu * t_nu[i + 1] -
                inv_dmu * t_nu[i];
        }
        at[j] = rhs / (1 + inv_dmu);
      }
      if (std::all_of(at.begin(), at.end(),
                      [](const Rational& r) { return r == 0; }))
        continue;
      const Rational back = prime_ratio(nu, eta, alpha_);
      // c = d'_eta e'_nu / (d'_nu e'_eta) * alpha~; prime_ratio(nu, eta)
      // gives d'_eta e'_nu / (d'_nu e'_eta).
      std::vector<Rational> c(n_);
      for (int j = 0; j < n_; ++j) c[j] = back * at[j];
      out.emplace(nu, std::move(c));
    }
    return out;
  }

  int n_;
  Rational alpha_;
  std::map<Composition, EngineCoeffs> memo_;
};

}  // namespace

EngineTable recurrence_engine(int n, const Rational& alpha, int max_weight) {
  Engine engine(n, alpha);
  return engine.table(max_weight);
}

std::vector<Composition> vertical_strips(const Composition& kappa, int m,
                                         int n) {
  assert(static_cast<int>(kappa.size()) == n);
  std::vector<Composition> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != static_cast<unsigned>(m)) continue;
    Composition lambda = kappa;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) ++lambda[i];
    if (is_partition(lambda)) out.push_back(std::move(lambda));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// (x+k)_r / (x)_r for integer k, rewritten with integer-length rising
// factorials so the value stays rational for fractional r.
Rational shifted_poch_ratio(const Rational& x, int k, const Rational& r) {
  Rational num = 1, den = 1;
  if (k >= 0) {
    for (int m = 0; m < k; ++m) {
      num *= x + r + m;
      den *= x + m;
    }
  } else {
    for (int m = 0; m < -k; ++m) {
      num *= x + k + m;
      den *= x + k + r + m;
    }
  }
  if (den == 0) throw AlphaSingular("Pochhammer ratio pole");
  return num / den;
}

}  // namespace

Rational symmetric_U(const Composition& lambda, const Composition& kappa,
                     const Rational& alpha, int n) {
  Rational u = 1;
  const Rational r = 1 / alpha;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int chi = (lambda[i] - kappa[i]) - (lambda[j] - kappa[j]);
      // f^1 part at alpha*kappa (+chi) with r = 1.
      const Rational base = Rational(j - i) + alpha * (kappa[i] - kappa[j]);
      if (base == 0) throw AlphaSingular("symmetric U pole (unit step)");
      u *= (base + chi) / base;
      // f^{1/alpha} part: (x)_r / (x+chi)_r.
      const Rational x = Rational(j - i) / alpha + (kappa[i] - kappa[j]);
      u /= shifted_poch_ratio(x, chi, r);
    }
  }
  return u;
}

std::vector<std::pair<Composition, Rational>> expand_ep_P(
    const Composition& kappa, int p, const Rational& alpha, int n) {
  std::vector<std::pair<Composition, Rational>> out;
  for (const auto& lambda : vertical_strips(kappa, p, n))
    out.emplace_back(lambda, symmetric_U(lambda, kappa, alpha, n));
  return out;
}

IndexSubset mstar_rows(const Composition& eta, int p) {
  const Permutation order = shortest_sorter(eta);
  IndexSubset rows(order.begin(), order.begin() + p);
  std::sort(rows.begin(), rows.end());
  return rows;
}

Composition mstar_target(const Composition& eta, int p) {
  Composition nu = eta;
  for (int i : mstar_rows(eta, p)) ++nu[i];
  return nu;
}

namespace {

// Split the rows of eta by whether their matched row of nu gained a box.
void split_rows(const Composition& eta, const Composition& nu,
                const Permutation& pi, std::vector<int>* g0,
                std::vector<int>* g1) {
  for (int j = 0; j < static_cast<int>(eta.size()); ++j) {
    if (nu[pi[j]] == eta[j] + 1)
      g1->push_back(j);
    else if (nu[pi[j]] == eta[j])
      g0->push_back(j);
    else
      throw std::invalid_argument("nu is not an add-boxes image of eta");
  }
}

}  // namespace

Rational swa_B(const Composition& eta, const Composition& nu,
               const Rational& alpha) {
  const Permutation pi = pi_map(eta, nu);
  std::vector<int> g0, g1;
  split_rows(eta, nu, pi, &g0, &g1);
  const auto bar = eta_bar(eta, alpha);
  Rational b = 1;
  for (int j : g0) {
    for (int k : g1) {
      if (j >= k) continue;
      const Rational diff = bar[j] - bar[k];
      if (diff == 0) throw AlphaSingular("swa pole (unit part)");
      b *= (diff + 1) / diff;
    }
  }
  for (int j : g1) {
    for (int k : g0) {
      if (pi[j] >= pi[k]) continue;
      const Rational diff = bar[j] - bar[k] + alpha;
      if (diff == 0) throw AlphaSingular("swa pole (alpha part)");
      b *= (diff - 1) / diff;
    }
  }
  return b;
}

Rational extended_B(const Composition& eta, const Composition& nu,
                    const Rational& alpha, bool moved_only) {
  const Permutation pi = pi_map(eta, nu);
  const auto bar = eta_bar(eta, alpha);
  const int n = static_cast<int>(eta.size());
  Rational b = swa_B(eta, nu, alpha);
  if (moved_only) {
    // Per-cycle reading: every nontrivial cycle of pi contributes -alpha
    // times one reciprocal per row in the cycle, the difference shifted by
    // -alpha exactly when the row's value moved to a larger index. For a
    // single cycle this is -alpha * A_I evaluated at bar(eta)/alpha, which
    // is what restores agreement with the one-variable closed form.
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
      if (seen[start] || pi[start] == start) continue;
      b *= -alpha;
      for (int j = start; !seen[j]; j = pi[j]) {
        seen[j] = true;
        const Rational diff =
            pi[j] > j ? Rational(bar[pi[j]] - bar[j] - alpha)
                      : Rational(bar[pi[j]] - bar[j]);
        if (diff == 0) throw AlphaSingular("extended-form pole");
        b /= diff;
      }
    }
    // A stationary row j that a value moves up past (pi(k) < j < k with
    // pi(j) = j) picks up one unit-shift factor per such crossing.
    for (int j = 0; j < n; ++j) {
      if (pi[j] != j) continue;
      for (int k = j + 1; k < n; ++k) {
        if (pi[k] >= j || pi[k] == k) continue;
        const Rational diff = bar[j] - bar[k];
        if (diff == 0) throw AlphaSingular("extended-form pole");
        b *= (diff + 1) / diff;
      }
    }
    return b;
  }
  // Literal reading: the two stated index conditions, taken over every row.
  for (int j = 0; j < n; ++j) {
    const int pj = pi[j];
    const int ppj = pi[pj];
    if (ppj < pj && pj < j) {
      const Rational diff = bar[pj] - bar[j];
      if (diff == 0) throw AlphaSingular("extended-form pole");
      b /= diff;
    } else if (j <= ppj && ppj <= pj) {
      const Rational diff = bar[pj] - bar[j] - alpha;
      if (diff == 0) throw AlphaSingular("extended-form pole");
      b /= diff;
    }
  }
  return b;
}

ConjectureRecord conjecture_Bp(const Composition& eta, int p,
                               const Composition& nu, const Rational& alpha,
                               JackTable& table) {
  ConjectureRecord rec;
  const BasisExpansion brute = brute_pieri_ep(eta, p, table);
  rec.A_oracle = 0;
  for (const auto& [target, c] : brute.terms)
    if (target == nu) rec.A_oracle = c;

  const HookData he = hooks(eta, alpha);
  const HookData hn = hooks(nu, alpha);
  rec.B_from_A = (hn.d_prime * he.e_prime) / (hn.e_prime * he.d_prime) *
                 rec.A_oracle;
  rec.B_swa = swa_B(eta, nu, alpha);
  rec.B_ext_moved = extended_B(eta, nu, alpha, /*moved_only=*/true);
  rec.B_ext_all = extended_B(eta, nu, alpha, /*moved_only=*/false);

  rec.is_mstar = (nu == mstar_target(eta, p));
  rec.is_p1 = (p == 1);
  const Permutation pi = pi_map(eta, nu);
  std::vector<int> g0, g1;
  split_rows(eta, nu, pi, &g0, &g1);
  int down = 0;
  for (int j : g1)
    if (pi[j] > j) ++down;
  rec.at_most_one_down = (down <= 1);

  rec.swa_match = (rec.B_swa == rec.B_from_A);
  rec.ext_moved_match = (rec.B_ext_moved == rec.B_from_A);
  rec.ext_all_match = (rec.B_ext_all == rec.B_from_A);
  return rec;
}

}  // namespace nsjack
