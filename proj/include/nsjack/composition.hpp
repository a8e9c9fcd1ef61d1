#ifndef NSJACK_COMPOSITION_HPP
#define NSJACK_COMPOSITION_HPP

#include <string>
#include <vector>

#include "nsjack/rational.hpp"

namespace nsjack {

// A composition is a fixed-length vector of nonnegative integers. All indices
// into compositions are 0-based throughout the library; the CLI converts to
// 1-based at the boundary.
using Composition = std::vector<int>;
using Permutation = std::vector<int>;  // image list: p[i] is where i maps to

int weight(const Composition& eta);

// The partition rearrangement eta+ (parts sorted weakly decreasing).
Composition partition_of(const Composition& eta);

bool is_partition(const Composition& eta);

Composition plus_ones(const Composition& eta);  // eta + (1^N)

// Eigenvalue vector: bar(eta)_i = alpha*eta_i - #{k<i : eta_k >= eta_i}
//                                            - #{k>i : eta_k > eta_i}.
std::vector<Rational> eta_bar(const Composition& eta, const Rational& alpha);

// Number of rows preceding row i in the stable decreasing order, i.e. the
// non-alpha part of bar(eta)_i.
int l_prime(const Composition& eta, int i);

// bar(eta)_i - bar(eta)_{i+1}, 0 <= i <= N-2.
Rational delta_bar(const Composition& eta, int i, const Rational& alpha);

// Strict dominance: all partial sums of nu strictly below those of eta.
// Requires equal weights.
bool dominance_less(const Composition& nu, const Composition& eta);

// Non-strict dominance partial order (partial sums <=, equal weights).
bool dominance_leq(const Composition& nu, const Composition& eta);

// The triangularity order: nu+ < eta+ in dominance, or nu+ == eta+ and
// nu < eta in dominance.
bool triangle_less(const Composition& nu, const Composition& eta);

// Stable argsort by decreasing part: result[r] is the position holding the
// rank-r part. This is the minimal-inversion sorting permutation.
Permutation shortest_sorter(const Composition& eta);

// Rank-matching permutation from positions of `from` to positions of `to`:
// pi(i) = sorter(to)[rank_from(i)].
Permutation pi_map(const Composition& from, const Composition& to);

// nu <= eta in the subset-style order: the canonical permutation
// pi = pi_map(nu, eta) satisfies nu_i < eta_{pi(i)} when i < pi(i) and
// nu_i <= eta_{pi(i)} when i >= pi(i).
bool preceq(const Composition& nu, const Composition& eta);

struct HookData {
  Rational d_prime;
  Rational d;
  Rational e;
  Rational e_prime;
};

// Hook products d', d over the diagram and the generalized-factorial
// products e, e' over eta+. Throws AlphaSingular if a factor vanishes.
HookData hooks(const Composition& eta, const Rational& alpha);

// d'_eta e_eta / (d_eta e'_eta), the squared-norm ratio against (0^N).
Rational norm_ratio(const Composition& eta, const Rational& alpha);

Composition phi_action(const Composition& eta);   // (eta_2,...,eta_N,eta_1+1)
Composition phi_inverse(const Composition& eta);  // requires eta_N >= 1
Composition s_action(const Composition& eta, int i);  // swap parts i, i+1

struct TransformCheck {
  bool ok = true;
  std::string detail;  // first counterexample when !ok
};

// Checks the eigenvalue-vector transformation rules under phi_action and
// s_action against direct recomputation.
TransformCheck eta_bar_transforms(const Composition& eta, const Rational& alpha);

// All compositions of the given weight (lexicographically ascending), and all
// with weight <= max_weight (ascending weight, then lex).
std::vector<Composition> compositions_of_weight(int n, int w);
std::vector<Composition> compositions_up_to_weight(int n, int max_weight);

std::string format_composition(const Composition& eta);  // "a,b,c"
Composition parse_composition(std::string_view text);

}  // namespace nsjack

#endif  // NSJACK_COMPOSITION_HPP
