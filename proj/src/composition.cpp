#include "nsjack/composition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nsjack {

int weight(const Composition& eta) {
  return std::accumulate(eta.begin(), eta.end(), 0);
}

Composition partition_of(const Composition& eta) {
  Composition p = eta;
  std::sort(p.begin(), p.end(), std::greater<int>());
  return p;
}

bool is_partition(const Composition& eta) {
  return std::is_sorted(eta.begin(), eta.end(), std::greater<int>());
}

Composition plus_ones(const Composition& eta) {
  Composition r = eta;
  for (int& x : r) ++x;
  return r;
}

int l_prime(const Composition& eta, int i) {
  const int n = static_cast<int>(eta.size());
  int count = 0;
  for (int k = 0; k < i; ++k)
    if (eta[k] >= eta[i]) ++count;
  for (int k = i + 1; k < n; ++k)
    if (eta[k] > eta[i]) ++count;
  return count;
}

std::vector<Rational> eta_bar(const Composition& eta, const Rational& alpha) {
  std::vector<Rational> bar(eta.size());
  for (size_t i = 0; i < eta.size(); ++i)
    bar[i] = alpha * eta[i] - l_prime(eta, static_cast<int>(i));
  return bar;
}

Rational delta_bar(const Composition& eta, int i, const Rational& alpha) {
  assert(i >= 0 && i + 1 < static_cast<int>(eta.size()));
  auto bar = eta_bar(eta, alpha);
  return bar[i] - bar[i + 1];
}

bool dominance_leq(const Composition& nu, const Composition& eta) {
  assert(nu.size() == eta.size());
  int sn = 0, se = 0;
  for (size_t j = 0; j < nu.size(); ++j) {
    sn += nu[j];
    se += eta[j];
    if (sn > se) return false;
  }
  return sn == se;
}

bool dominance_less(const Composition& nu, const Composition& eta) {
  return nu != eta && dominance_leq(nu, eta);
}

bool triangle_less(const Composition& nu, const Composition& eta) {
  Composition np = partition_of(nu), ep = partition_of(eta);
  if (np != ep) return dominance_less(np, ep);
  return dominance_less(nu, eta);
}

Permutation shortest_sorter(const Composition& eta) {
  Permutation order(eta.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return eta[a] > eta[b]; });
  return order;
}

Permutation pi_map(const Composition& from, const Composition& to) {
  assert(from.size() == to.size());
  Permutation sf = shortest_sorter(from), st = shortest_sorter(to);
  Permutation pi(from.size());
  for (size_t r = 0; r < from.size(); ++r) pi[sf[r]] = st[r];
  return pi;
}

bool preceq(const Composition& nu, const Composition& eta) {
  assert(nu.size() == eta.size());
  Permutation pi = pi_map(nu, eta);
  for (int i = 0; i < static_cast<int>(nu.size()); ++i) {
    if (i < pi[i]) {
      if (!(nu[i] < eta[pi[i]])) return false;
    } else {
      if (!(nu[i] <= eta[pi[i]])) return false;
    }
  }
  return true;
}

namespace {

// Rising factorial of integer length over rationals.
Rational pochhammer(const Rational& u, int k) {
  Rational r = 1;
  for (int m = 0; m < k; ++m) r *= u + m;
  return r;
}

// [u]_{kappa} for a partition kappa: product over rows of the length-kappa_r
// rising factorial at u - (r-1)/alpha.
Rational generalized_factorial(const Rational& u, const Composition& kappa,
                               const Rational& alpha) {
  Rational result = 1;
  for (size_t r = 0; r < kappa.size(); ++r)
    result *= pochhammer(u - Rational(static_cast<int>(r)) / alpha, kappa[r]);
  return result;
}

}  // namespace

HookData hooks(const Composition& eta, const Rational& alpha) {
  const int n = static_cast<int>(eta.size());
  HookData h{1, 1, 1, 1};
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= eta[i]; ++j) {
      const int arm = eta[i] - j;
      int leg = 0;
      for (int k = 0; k < i; ++k)
        if (j <= eta[k] + 1 && eta[k] + 1 <= eta[i]) ++leg;
      for (int k = i + 1; k < n; ++k)
        if (j <= eta[k] && eta[k] <= eta[i]) ++leg;
      const Rational f = alpha * (arm + 1) + leg;
      if (f == 0 || f + 1 == 0)
        throw AlphaSingular("hook factor vanishes at node (" +
                            std::to_string(i + 1) + "," + std::to_string(j) +
                            ")");
      h.d_prime *= f;
      h.d *= f + 1;
    }
  }
  const Composition kappa = partition_of(eta);
  const int w = weight(eta);
  Rational apow = 1;
  for (int k = 0; k < w; ++k) apow *= alpha;
  h.e = apow * generalized_factorial(1 + Rational(n) / alpha, kappa, alpha);
  h.e_prime =
      apow * generalized_factorial(1 + Rational(n - 1) / alpha, kappa, alpha);
  if (h.e == 0 || h.e_prime == 0)
    throw AlphaSingular("generalized factorial vanishes");
  return h;
}

Rational norm_ratio(const Composition& eta, const Rational& alpha) {
  HookData h = hooks(eta, alpha);
  return h.d_prime * h.e / (h.d * h.e_prime);
}

Composition phi_action(const Composition& eta) {
  Composition r(eta.begin() + 1, eta.end());
  r.push_back(eta.front() + 1);
  return r;
}

Composition phi_inverse(const Composition& eta) {
  assert(eta.back() >= 1);
  Composition r;
  r.reserve(eta.size());
  r.push_back(eta.back() - 1);
  r.insert(r.end(), eta.begin(), eta.end() - 1);
  return r;
}

Composition s_action(const Composition& eta, int i) {
  assert(i >= 0 && i + 1 < static_cast<int>(eta.size()));
  Composition r = eta;
  std::swap(r[i], r[i + 1]);
  return r;
}

TransformCheck eta_bar_transforms(const Composition& eta,
                                  const Rational& alpha) {
  const int n = static_cast<int>(eta.size());
  const auto bar = eta_bar(eta, alpha);
  TransformCheck result;
  auto fail = [&](const std::string& what) {
    if (result.ok) {
      result.ok = false;
      result.detail = what + " at eta=" + format_composition(eta);
    }
  };

  const auto bar_phi = eta_bar(phi_action(eta), alpha);
  for (int i = 0; i + 1 < n; ++i)
    if (bar_phi[i] != bar[i + 1]) fail("phi shift, entry " + std::to_string(i));
  if (bar_phi[n - 1] != bar[0] + alpha) fail("phi shift, last entry");

  for (int i = 0; i + 1 < n; ++i) {
    const auto bar_s = eta_bar(s_action(eta, i), alpha);
    for (int j = 0; j < n; ++j) {
      Rational expected;
      if (eta[i] == eta[i + 1] || (j != i && j != i + 1))
        expected = bar[j];
      else
        expected = (j == i) ? bar[i + 1] : bar[i];
      if (bar_s[j] != expected) fail("swap rule, i=" + std::to_string(i));
    }
  }
  return result;
}

std::vector<Composition> compositions_of_weight(int n, int w) {
  std::vector<Composition> out;
  Composition cur(n, 0);
  // Lexicographic recursion over the first part.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, w);
  return out;
}

std::vector<Composition> compositions_up_to_weight(int n, int max_weight) {
  std::vector<Composition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto layer = compositions_of_weight(n, w);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::string format_composition(const Composition& eta) {
  std::string s;
  for (size_t i = 0; i < eta.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(eta[i]);
  }
  return s;
}

Composition parse_composition(std::string_view text) {
  Composition eta;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    size_t used = 0;
    int v = std::stoi(token, &used);
    if (used != token.size() || v < 0)
      throw std::invalid_argument("bad composition: " + std::string(text));
    eta.push_back(v);
  }
  if (eta.empty())
    throw std::invalid_argument("bad composition: " + std::string(text));
  return eta;
}

}  // namespace nsjack
