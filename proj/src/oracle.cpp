#include "nsjack/oracle.hpp"

#include <algorithm>

namespace nsjack {

BasisExpansion expand_in_E(const Poly& f, JackTable& table) {
  BasisExpansion out{{}, f};
  if (f.is_zero()) return out;
  f.homogeneous_degree();  // must be homogeneous
  while (!out.residual.is_zero()) {
    const Monomial lead = leading_monomial_triangle(out.residual);
    const Composition mu(lead.begin(), lead.end());
    const Rational c = out.residual.coeff(lead);
    out.terms.emplace_back(mu, c);
    out.residual -= c * table.generate(mu);
    // The subtraction must strictly lower the leading monomial; if it comes
    // back we are cycling outside the span.
    if (!out.residual.is_zero() &&
        out.residual.coeff(lead) != 0)
      throw NotInSpan("elimination stalled at " + format_composition(mu));
  }
  std::sort(out.terms.begin(), out.terms.end());
  return out;
}

BasisExpansion brute_pieri(const Composition& eta, const IndexSubset& S,
                           JackTable& table) {
  Poly f = table.generate(eta);
  for (int i : S) f = Poly::variable(table.nvars(), i) * f;
  return expand_in_E(f, table);
}

BasisExpansion brute_pieri_ep(const Composition& eta, int p,
                              JackTable& table) {
  const Poly f = elementary_symmetric(table.nvars(), p) * table.generate(eta);
  return expand_in_E(f, table);
}

AuditReport eigen_audit(JackTable& table) {
  AuditReport report;
  // Snapshot the keys: applying the operator never adds entries, but iterate
  // over a copy anyway so the table may grow concurrently-in-spirit.
  std::vector<Composition> keys;
  for (const auto& [eta, poly] : table.entries()) keys.push_back(eta);
  for (const auto& eta : keys) {
    const Poly& e = table.generate(eta);
    const auto bar = eta_bar(eta, table.alpha());
    for (int i = 0; i < table.nvars(); ++i) {
      ++report.checked;
      if (!(cherednik_apply(i, e, table.alpha()) == bar[i] * e))
        report.failures.push_back("eigenrelation fails: eta=" +
                                  format_composition(eta) +
                                  " i=" + std::to_string(i + 1));
    }
  }
  return report;
}

std::vector<std::pair<Composition, Rational>> brute_symmetric(
    const Composition& kappa, int p, JackTable& table) {
  const int n = table.nvars();
  Poly residual = elementary_symmetric(n, p) * table.symmetric_P(kappa);
  std::vector<std::pair<Composition, Rational>> terms;
  while (!residual.is_zero()) {
    // Dominance-maximal partition exponent in the support, lex tie-break.
    Monomial best;
    for (const auto& [m, c] : residual.terms()) {
      Composition cand(m.begin(), m.end());
      if (!is_partition(cand)) continue;
      bool dominated = false;
      for (const auto& [m2, c2] : residual.terms()) {
        Composition other(m2.begin(), m2.end());
        if (is_partition(other) && dominance_less(cand, other)) {
          dominated = true;
          break;
        }
      }
      if (!dominated && (best.empty() || m > best)) best = m;
    }
    if (best.empty())
      throw NotInSpan("no partition monomial left in symmetric elimination");
    const Composition mu(best.begin(), best.end());
    const Rational c = residual.coeff(best);
    terms.emplace_back(mu, c);
    residual -= c * table.symmetric_P(mu);
    if (residual.coeff(best) != 0)
      throw NotInSpan("symmetric elimination stalled at " +
                      format_composition(mu));
  }
  std::sort(terms.begin(), terms.end());
  return terms;
}

}  // namespace nsjack
