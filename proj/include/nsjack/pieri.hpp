#ifndef NSJACK_PIERI_HPP
#define NSJACK_PIERI_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nsjack/composition.hpp"
#include "nsjack/jack.hpp"
#include "nsjack/subsets.hpp"

namespace nsjack {

// The rational-function kernel behind every closed-form Pieri coefficient,
// evaluated at a point x (normally bar(eta)/alpha). A is a product of s
// difference reciprocals along the cycle, the B variants are products of
// b(x,y) = (x-y-1/alpha)/(x-y) factors over the gaps, and chi / chi_tilde
// are the per-variable selectors.
struct CoefficientKernel {
  Rational A;
  Rational B;
  Rational Btilde;
  Rational Bhat;
  std::map<int, Rational> chi;        // keyed by i in I
  std::map<int, Rational> chi_tilde;  // keyed by i in I
};

// Kernel at an arbitrary evaluation point x (length N). Bhat is left at 0:
// it rescales Btilde by a hook ratio of the composition behind x, which a
// bare point does not determine.
CoefficientKernel kernel_at(const std::vector<Rational>& x, const IndexSubset& I,
                            const Rational& alpha);

// Kernel at x = bar(eta)/alpha, with Bhat = alpha * e'_eta / e'_{c_I(eta)}
// * Btilde filled in.
CoefficientKernel kernel(const Composition& eta, const IndexSubset& I,
                         const Rational& alpha);

struct PieriExpansion {
  Composition source;
  std::string selector;
  std::vector<std::pair<Composition, Rational>> terms;
};

// Coefficient of E_nu in z_i * E_eta (0-based i). Zero unless nu = c_I(eta)
// for a maximal I containing i.
Rational coeff_p1(const Composition& eta, int i, const Composition& nu,
                  const Rational& alpha);

PieriExpansion expand_z_i(const Composition& eta, int i, const Rational& alpha);
PieriExpansion expand_e1(const Composition& eta, const Rational& alpha);

// Coefficient of E_nu in (prod_{j != j1} z_j) * E_eta, where j1 is the single
// excluded index (0-based). Zero unless nu = hat_c_I(eta) for a hat-maximal I
// with j1 in I.
Rational coeff_pN1(const Composition& eta, int j1, const Composition& nu,
                   const Rational& alpha);

PieriExpansion expand_z_except(const Composition& eta, int j1,
                               const Rational& alpha);
PieriExpansion expand_eN1(const Composition& eta, const Rational& alpha);

// Coefficients computed purely through the swap / raising recurrences from
// the weight-zero initial expansion, bypassing the closed form. For each
// source eta, maps target nu to the N per-variable coefficients.
using EngineCoeffs = std::map<Composition, std::vector<Rational>>;
using EngineTable = std::map<Composition, EngineCoeffs>;
EngineTable recurrence_engine(int n, const Rational& alpha, int max_weight);

// --- symmetric rule -------------------------------------------------------

// Partitions lambda = kappa + vertical m-strip with at most n parts.
std::vector<Composition> vertical_strips(const Composition& kappa, int m, int n);

// The Pieri coefficient of P_lambda in e_p * P_kappa, as a ratio of the
// f_n^r products with all fractional-step Pochhammer ratios rewritten as
// integer-length ones.
Rational symmetric_U(const Composition& lambda, const Composition& kappa,
                     const Rational& alpha, int n);

std::vector<std::pair<Composition, Rational>> expand_ep_P(
    const Composition& kappa, int p, const Rational& alpha, int n);

// --- general-p conjecture checker -----------------------------------------

// Rows incremented in the triangle-greatest target eta + chi_{M*}: exactly
// the p stable-largest rows.
IndexSubset mstar_rows(const Composition& eta, int p);
Composition mstar_target(const Composition& eta, int p);

// The two-product form of the normalized coefficient B, with
// pi = pi_map(eta, nu).
Rational swa_B(const Composition& eta, const Composition& nu,
               const Rational& alpha);

// The extended form: swa_B times extra reciprocal factors attached to the
// rows rearranged by pi. Two readings are exposed. moved_only = true uses the
// per-cycle reading: each nontrivial cycle of pi contributes -alpha times one
// reciprocal per row (difference of bars, shifted by -alpha for the row whose
// value moves to a larger index); this is the reading consistent with the
// single-variable closed form. moved_only = false evaluates the literal pair
// of index conditions pi^2(j) < pi(j) < j and j <= pi^2(j) <= pi(j) over all
// rows.
Rational extended_B(const Composition& eta, const Composition& nu,
                    const Rational& alpha, bool moved_only);

struct ConjectureRecord {
  Rational A_oracle;
  Rational B_from_A;
  Rational B_swa;
  Rational B_ext_moved;
  Rational B_ext_all;
  bool is_mstar = false;
  bool is_p1 = false;
  bool at_most_one_down = false;
  bool swa_match = false;
  bool ext_moved_match = false;
  bool ext_all_match = false;
};

// Compares the candidate closed forms against the brute-force coefficient of
// E_nu in e_p * E_eta. Reports, never asserts.
ConjectureRecord conjecture_Bp(const Composition& eta, int p,
                               const Composition& nu, const Rational& alpha,
                               JackTable& table);

}  // namespace nsjack

#endif  // NSJACK_PIERI_HPP
