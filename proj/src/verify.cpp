#include "nsjack/verify.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "nsjack/composition.hpp"
#include "nsjack/jack.hpp"
#include "nsjack/oracle.hpp"
#include "nsjack/pieri.hpp"
#include "nsjack/subsets.hpp"

namespace nsjack {

namespace {

std::string where(const Composition& eta, const Rational& alpha) {
  return "eta=(" + format_composition(eta) +
         ") alpha=" + format_rational(alpha);
}

std::map<Composition, Rational> as_map(
    const std::vector<std::pair<Composition, Rational>>& terms) {
  std::map<Composition, Rational> m;
  for (const auto& [nu, c] : terms)
    if (c != 0) m[nu] += c;
  for (auto it = m.begin(); it != m.end();)
    it = (it->second == 0) ? m.erase(it) : std::next(it);
  return m;
}

struct Suite {
  int n;
  int max_weight;
  const Rational& alpha;
  JackTable& table;
  std::vector<Composition> etas;

  void fail(CheckResult& r, const std::string& detail) {
    if (!r.pass) return;
    r.pass = false;
    r.detail = detail;
  }

  CheckResult eigen() {
    CheckResult r{"eigenvalue relations", true, ""};
    const AuditReport report = eigen_audit(table);
    if (!report.ok()) fail(r, report.failures.front());
    return r;
  }

  CheckResult transforms() {
    CheckResult r{"eigenvalue-vector transformation rules", true, ""};
    for (const auto& eta : etas) {
      const TransformCheck c = eta_bar_transforms(eta, alpha);
      if (!c.ok) {
        fail(r, c.detail);
        break;
      }
    }
    return r;
  }

  CheckResult p1_vs_oracle() {
    CheckResult r{"single-variable product vs oracle", true, ""};
    for (const auto& eta : etas) {
      for (int i = 0; i < n && r.pass; ++i) {
        const auto closed = as_map(expand_z_i(eta, i, alpha).terms);
        const auto brute = as_map(brute_pieri(eta, {i}, table).terms);
        if (closed != brute)
          fail(r, "z_" + std::to_string(i + 1) + " at " + where(eta, alpha));
      }
      if (!r.pass) break;
    }
    return r;
  }

  CheckResult e1_vs_oracle() {
    CheckResult r{"first elementary symmetric product vs oracle", true, ""};
    for (const auto& eta : etas) {
      const auto closed = as_map(expand_e1(eta, alpha).terms);
      const auto brute = as_map(brute_pieri_ep(eta, 1, table).terms);
      if (closed != brute) {
        fail(r, "e_1 at " + where(eta, alpha));
        break;
      }
    }
    return r;
  }

  CheckResult sum_rule() {
    CheckResult r{"selector sum rule and additivity", true, ""};
    for (const auto& eta : etas) {
      for (const auto& I : maximal_sets(eta)) {
        const CoefficientKernel k = kernel(eta, I, alpha);
        Rational sum = 0;
        for (const auto& [i, v] : k.chi_tilde) sum += v;
        if (sum != -alpha) {
          fail(r, "selector sum at " + where(eta, alpha));
          break;
        }
      }
      if (!r.pass) break;
      std::map<Composition, Rational> total;
      for (int i = 0; i < n; ++i)
        for (const auto& [nu, c] : expand_z_i(eta, i, alpha).terms)
          total[nu] += c;
      for (auto it = total.begin(); it != total.end();)
        it = (it->second == 0) ? total.erase(it) : std::next(it);
      if (total != as_map(expand_e1(eta, alpha).terms)) {
        fail(r, "additivity at " + where(eta, alpha));
        break;
      }
    }
    return r;
  }

  CheckResult engine_equivalence() {
    CheckResult r{"recurrence engine vs closed form", true, ""};
    const EngineTable engine = recurrence_engine(n, alpha, max_weight - 1);
    for (const auto& [eta, coeffs] : engine) {
      std::map<Composition, std::vector<Rational>> closed;
      for (int i = 0; i < n; ++i)
        for (const auto& [nu, c] : expand_z_i(eta, i, alpha).terms) {
          auto& vec = closed.try_emplace(nu, std::vector<Rational>(n, 0))
                          .first->second;
          vec[i] = c;
        }
      if (coeffs != closed) {
        fail(r, where(eta, alpha));
        break;
      }
    }
    return r;
  }

  CheckResult pN1_vs_oracle() {
    CheckResult r{"complementary product vs oracle", true, ""};
    for (const auto& eta : etas) {
      for (int j1 = 0; j1 < n && r.pass; ++j1) {
        IndexSubset S;
        for (int j = 0; j < n; ++j)
          if (j != j1) S.push_back(j);
        const auto closed = as_map(expand_z_except(eta, j1, alpha).terms);
        const auto brute = as_map(brute_pieri(eta, S, table).terms);
        if (closed != brute)
          fail(r, "exclude z_" + std::to_string(j1 + 1) + " at " +
                      where(eta, alpha));
      }
      if (!r.pass) break;
      const auto closed = as_map(expand_eN1(eta, alpha).terms);
      const auto brute = as_map(brute_pieri_ep(eta, n - 1, table).terms);
      if (closed != brute) {
        fail(r, "e_" + std::to_string(n - 1) + " at " + where(eta, alpha));
        break;
      }
    }
    return r;
  }

  CheckResult pN_trivial() {
    CheckResult r{"full product vs oracle", true, ""};
    for (const auto& eta : etas) {
      IndexSubset all(n);
      for (int j = 0; j < n; ++j) all[j] = j;
      const auto brute = as_map(brute_pieri(eta, all, table).terms);
      const std::map<Composition, Rational> expected{{plus_ones(eta), 1}};
      if (brute != expected) {
        fail(r, where(eta, alpha));
        break;
      }
    }
    return r;
  }

  CheckResult duality() {
    CheckResult r{"norm duality between the two closed forms", true, ""};
    for (const auto& eta : etas) {
      const Rational ne = norm_ratio(eta, alpha);
      for (const auto& I : hat_maximal_sets(eta)) {
        const Composition nu = hat_c_I(eta, I);
        const Rational nn = norm_ratio(nu, alpha);
        for (int j1 : I) {
          const Rational lhs = coeff_pN1(eta, j1, nu, alpha);
          const Rational rhs =
              coeff_p1(nu, j1, plus_ones(eta), alpha) * ne / nn;
          if (lhs != rhs) {
            fail(r, "j1=" + std::to_string(j1 + 1) + " at " +
                        where(eta, alpha));
            return r;
          }
        }
      }
    }
    return r;
  }

  CheckResult symmetric() {
    CheckResult r{"symmetric rule vs oracle", true, ""};
    for (const auto& kappa : etas) {
      if (!is_partition(kappa)) continue;
      for (int p = 1; p <= n && r.pass; ++p) {
        const auto closed = as_map(expand_ep_P(kappa, p, alpha, n));
        const auto brute = as_map(brute_symmetric(kappa, p, table));
        if (closed != brute)
          fail(r, "e_" + std::to_string(p) + " at " + where(kappa, alpha));
      }
      if (!r.pass) break;
    }
    return r;
  }

  CheckResult proved_general_p() {
    CheckResult r{"normalized-coefficient proved cases", true, ""};
    for (const auto& eta : etas) {
      for (int p = 1; p <= n && r.pass; ++p) {
        const Composition nu = mstar_target(eta, p);
        const ConjectureRecord rec = conjecture_Bp(eta, p, nu, alpha, table);
        if (rec.A_oracle != 1 || !rec.swa_match)
          fail(r, "p=" + std::to_string(p) + " at " + where(eta, alpha));
      }
      if (!r.pass) break;
      for (const auto& I : maximal_sets(eta)) {
        const Composition nu = c_I(eta, I);
        const ConjectureRecord rec = conjecture_Bp(eta, 1, nu, alpha, table);
        if (!rec.ext_moved_match) {
          fail(r, "p=1 extended form at " + where(eta, alpha));
          break;
        }
      }
      if (!r.pass) break;
    }
    return r;
  }
};

}  // namespace

std::vector<CheckResult> run_verify(int n, const std::vector<Rational>& alphas,
                                    int max_weight) {
  // One result per check name; a counterexample at any alpha fails the check.
  std::vector<CheckResult> merged;
  auto merge = [&](const CheckResult& r) {
    for (auto& m : merged) {
      if (m.name != r.name) continue;
      if (m.pass && !r.pass) {
        m.pass = false;
        m.detail = r.detail;
      }
      return;
    }
    merged.push_back(r);
  };

  for (const auto& alpha : alphas) {
    JackTable table(n, alpha);
    // Fill before the eigen audit so it covers the whole working grid; the
    // oracle expansions grow the table lazily afterwards.
    table.fill(max_weight);
    Suite suite{n, max_weight, alpha, table,
                compositions_up_to_weight(n, max_weight)};
    merge(suite.eigen());
    merge(suite.transforms());
    merge(suite.p1_vs_oracle());
    merge(suite.e1_vs_oracle());
    merge(suite.sum_rule());
    merge(suite.engine_equivalence());
    merge(suite.pN1_vs_oracle());
    merge(suite.pN_trivial());
    merge(suite.duality());
    merge(suite.symmetric());
    merge(suite.proved_general_p());
  }
  return merged;
}

bool report_verify(const std::vector<CheckResult>& results, std::ostream& out) {
  bool all = true;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.pass) out << "  [" << r.detail << "]";
    out << "\n";
    all = all && r.pass;
  }
  return all;
}

}  // namespace nsjack
