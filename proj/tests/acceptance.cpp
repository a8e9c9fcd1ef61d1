// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.

#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "nsjack/cache.hpp"
#include "nsjack/oracle.hpp"
#include "nsjack/pieri.hpp"

using namespace nsjack;

namespace {

const std::vector<Rational> kMainAlphas = {Rational(2), Rational(3),
                                           Rational(5, 2)};

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

std::map<Composition, Rational> as_map(
    const std::vector<std::pair<Composition, Rational>>& terms) {
  std::map<Composition, Rational> m;
  for (const auto& [nu, c] : terms)
    if (c != 0) m[nu] = c;
  return m;
}

// The shared grid of criteria 1-4: N in {2,3,4}, |eta| <= 5 (4 at N=4).
template <typename F>
bool over_main_grid(std::string& detail, F&& body) {
  for (const auto& alpha : kMainAlphas) {
    for (int n = 2; n <= 4; ++n) {
      const int maxw = (n == 4) ? 4 : 5;
      JackTable table(n, alpha);
      for (const auto& eta : compositions_up_to_weight(n, maxw)) {
        if (!body(n, alpha, table, eta)) {
          detail = "eta=(" + format_composition(eta) +
                   ") alpha=" + format_rational(alpha);
          return false;
        }
      }
    }
  }
  return true;
}

bool c1_eigen(std::string& detail) {
  return over_main_grid(detail, [](int n, const Rational& alpha,
                                   JackTable& table, const Composition& eta) {
    const Poly& e = table.generate(eta);
    const auto bar = eta_bar(eta, alpha);
    for (int i = 0; i < n; ++i)
      if (!(cherednik_apply(i, e, alpha) == bar[i] * e)) return false;
    return true;
  });
}

bool c2_p1_closed_form(std::string& detail) {
  return over_main_grid(detail, [](int n, const Rational& alpha,
                                   JackTable& table, const Composition& eta) {
    for (int i = 0; i < n; ++i) {
      if (as_map(expand_z_i(eta, i, alpha).terms) !=
          as_map(brute_pieri(eta, {i}, table).terms))
        return false;
      // Zero pattern: nonzero only at nu = c_I(eta) with i in a maximal I.
      for (const auto& [nu, c] : brute_pieri(eta, {i}, table).terms) {
        bool labeled = false;
        for (const auto& I : maximal_sets(eta))
          if (std::find(I.begin(), I.end(), i) != I.end() &&
              c_I(eta, I) == nu)
            labeled = true;
        if (!labeled) return false;
      }
    }
    return true;
  });
}

bool c3_engine(std::string& detail) {
  for (const auto& alpha : kMainAlphas) {
    for (int n = 2; n <= 4; ++n) {
      const int maxw = (n == 4) ? 4 : 5;
      const EngineTable engine = recurrence_engine(n, alpha, maxw);
      for (const auto& [eta, coeffs] : engine) {
        std::map<Composition, std::vector<Rational>> closed;
        for (int i = 0; i < n; ++i)
          for (const auto& [nu, c] : expand_z_i(eta, i, alpha).terms)
            closed.try_emplace(nu, std::vector<Rational>(n, 0))
                .first->second[i] = c;
        if (coeffs != closed) {
          detail = "eta=(" + format_composition(eta) +
                   ") alpha=" + format_rational(alpha);
          return false;
        }
      }
    }
  }
  return true;
}

bool c4_sum_rule(std::string& detail) {
  return over_main_grid(detail, [](int n, const Rational& alpha,
                                   JackTable& table, const Composition& eta) {
    for (const auto& I : maximal_sets(eta)) {
      const CoefficientKernel k = kernel(eta, I, alpha);
      Rational sum = 0;
      for (const auto& [i, v] : k.chi_tilde) sum += v;
      if (sum != -alpha) return false;
    }
    std::map<Composition, Rational> total;
    for (int i = 0; i < n; ++i)
      for (const auto& [nu, c] : expand_z_i(eta, i, alpha).terms)
        total[nu] += c;
    for (auto it = total.begin(); it != total.end();)
      it = (it->second == 0) ? total.erase(it) : std::next(it);
    return total == as_map(expand_e1(eta, alpha).terms);
  });
}

bool c5_pN1(std::string& detail) {
  for (const Rational alpha : {Rational(2), Rational(5, 2)}) {
    for (int n = 2; n <= 3; ++n) {
      JackTable table(n, alpha);
      for (const auto& eta : compositions_up_to_weight(n, 4)) {
        bool ok = true;
        for (int j1 = 0; j1 < n && ok; ++j1) {
          IndexSubset S;
          for (int j = 0; j < n; ++j)
            if (j != j1) S.push_back(j);
          ok = as_map(expand_z_except(eta, j1, alpha).terms) ==
               as_map(brute_pieri(eta, S, table).terms);
        }
        if (ok)
          ok = as_map(expand_eN1(eta, alpha).terms) ==
               as_map(brute_pieri_ep(eta, n - 1, table).terms);
        if (!ok) {
          detail = "eta=(" + format_composition(eta) +
                   ") alpha=" + format_rational(alpha);
          return false;
        }
      }
    }
  }
  return true;
}

bool c6_duality(std::string& detail) {
  for (const auto& alpha : kMainAlphas) {
    for (int n = 2; n <= 3; ++n) {
      for (const auto& eta : compositions_up_to_weight(n, 3)) {
        const Rational ne = norm_ratio(eta, alpha);
        for (const auto& I : hat_maximal_sets(eta)) {
          const Composition nu = hat_c_I(eta, I);
          const Rational nn = norm_ratio(nu, alpha);
          for (int j1 : I) {
            if (coeff_pN1(eta, j1, nu, alpha) * nn !=
                coeff_p1(nu, j1, plus_ones(eta), alpha) * ne) {
              detail = "eta=(" + format_composition(eta) +
                       ") alpha=" + format_rational(alpha);
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

bool c7_symmetric(std::string& detail) {
  for (const Rational alpha : {Rational(1), Rational(2), Rational(1, 2)}) {
    for (int n = 2; n <= 3; ++n) {
      JackTable table(n, alpha);
      for (const auto& kappa : compositions_up_to_weight(n, 4)) {
        if (!is_partition(kappa)) continue;
        for (int p = 1; p <= n; ++p) {
          const auto closed = expand_ep_P(kappa, p, alpha, n);
          if (alpha == 1)
            for (const auto& [lambda, u] : closed)
              if (u != 1) {
                detail = "Schur coefficient != 1 at kappa=(" +
                         format_composition(kappa) + ")";
                return false;
              }
          if (as_map(closed) != as_map(brute_symmetric(kappa, p, table))) {
            detail = "kappa=(" + format_composition(kappa) +
                     ") p=" + std::to_string(p) +
                     " alpha=" + format_rational(alpha);
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool c8_proved_cases(std::string& detail) {
  for (const Rational alpha : {Rational(2), Rational(5, 2)}) {
    for (int n = 2; n <= 3; ++n) {
      JackTable table(n, alpha);
      for (const auto& eta : compositions_up_to_weight(n, 4)) {
        for (int p = 1; p <= n; ++p) {
          const ConjectureRecord rec =
              conjecture_Bp(eta, p, mstar_target(eta, p), alpha, table);
          if (rec.A_oracle != 1 || !rec.swa_match) {
            detail = "eta=(" + format_composition(eta) +
                     ") p=" + std::to_string(p) +
                     " alpha=" + format_rational(alpha);
            return false;
          }
        }
        for (const auto& I : maximal_sets(eta)) {
          const ConjectureRecord rec =
              conjecture_Bp(eta, 1, c_I(eta, I), alpha, table);
          if (!rec.ext_moved_match) {
            detail = "p=1 extended form, eta=(" + format_composition(eta) +
                     ") alpha=" + format_rational(alpha);
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool c9_explorer_report(std::string& detail) {
  // Report-only: emit the match rate for the empirical claim, never assert.
  const Rational alpha = 2;
  JackTable table(3, alpha);
  int hits = 0, total = 0, other_hits = 0, other_total = 0;
  for (const auto& eta : compositions_up_to_weight(3, 4)) {
    for (const auto& [nu, a] : brute_pieri_ep(eta, 2, table).terms) {
      if (a == 0) continue;
      const ConjectureRecord rec = conjecture_Bp(eta, 2, nu, alpha, table);
      if (rec.at_most_one_down) {
        ++total;
        if (rec.ext_moved_match) ++hits;
      } else {
        ++other_total;
        if (rec.ext_moved_match) ++other_hits;
      }
    }
  }
  std::ostringstream msg;
  msg << "N=3 p=2 alpha=2 |eta|<=4: extended form matches " << hits << "/"
      << total << " rows with at most one part moving downwards";
  if (other_total)
    msg << "; " << other_hits << "/" << other_total << " other rows";
  detail = msg.str();
  return true;
}

bool c10_combinatorics(std::string& detail) {
  if (support_J({2, 0, 1}, 1).size() != 6) {
    detail = "support of (2,0,1) at p=1";
    return false;
  }
  {
    std::vector<Composition> images;
    for (const auto& I : maximal_sets({2, 0, 1}))
      images.push_back(c_I({2, 0, 1}, I));
    std::sort(images.begin(), images.end());
    if (support_J({2, 0, 1}, 1) != images) {
      detail = "maximal-set images differ from the p=1 support";
      return false;
    }
  }
  for (const auto& eta : compositions_up_to_weight(3, 3)) {
    for (const auto& I : all_subsets(3)) {
      if (is_maximal(eta, I) != maximality_via_nu(eta, I)) {
        detail = "maximality characterizations disagree at eta=(" +
                 format_composition(eta) + ")";
        return false;
      }
    }
  }
  // (0,2,2): I={3} is shadowed by the equal part eta_2, I={2,3} is maximal,
  // and both index sets map onto the same target (0,2,3).
  if (is_maximal({0, 2, 2}, {2}) || !is_maximal({0, 2, 2}, {1, 2})) {
    detail = "maximality of {3} / {2,3} for (0,2,2)";
    return false;
  }
  if (c_I({0, 2, 2}, {2}) != Composition{0, 2, 3} ||
      c_I({0, 2, 2}, {1, 2}) != Composition{0, 2, 3}) {
    detail = "duplicate image for (0,2,2)";
    return false;
  }
  return true;
}

bool c11_cache(std::string& detail) {
  JackTable table(3, Rational(2));
  table.fill(4);
  const std::string text = serialize_table(table);
  std::istringstream in(text);
  if (serialize_table(parse_table(in)) != text) {
    detail = "round trip not byte-exact";
    return false;
  }
  JackTable again(3, Rational(2));
  again.fill(4);
  if (serialize_table(again) != text) {
    detail = "regeneration not deterministic";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 eigenrelations on the full grid", c1_eigen},
      {"2 p=1 closed form vs oracle", c2_p1_closed_form},
      {"3 recurrence engine reproduces p=1", c3_engine},
      {"4 selector sum rule and e_1 additivity", c4_sum_rule},
      {"5 p=N-1 closed forms vs oracle", c5_pN1},
      {"6 norm duality between p=1 and p=N-1", c6_duality},
      {"7 symmetric rule vs oracle", c7_symmetric},
      {"8 proved general-p cases", c8_proved_cases},
      {"9 explorer empirical report (not asserted)", c9_explorer_report},
      {"10 subset combinatorics", c10_combinatorics},
      {"11 cache round trip and determinism", c11_cache},
  };
  bool all = true;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.name;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    all = all && ok;
  }
  return all ? 0 : 1;
}
