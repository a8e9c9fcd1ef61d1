#ifndef NSJACK_SUBSETS_HPP
#define NSJACK_SUBSETS_HPP

#include <vector>

#include "nsjack/composition.hpp"

namespace nsjack {

// Strictly increasing, nonempty, 0-based indices into {0..N-1}.
using IndexSubset = std::vector<int>;

// All nonempty subsets of {0..N-1}, lexicographically ordered.
std::vector<IndexSubset> all_subsets(int n);

// The weight-(|eta|+1) composition obtained by cycling the parts along I and
// adding one box: nu_{t_j} = eta_{t_{j+1}} (j<s), nu_{t_s} = eta_{t_1}+1,
// untouched off I.
Composition c_I(const Composition& eta, const IndexSubset& I);

// Maximality of I with respect to eta: no part between consecutive t's equals
// the incoming part, and no part after t_s equals eta_{t_1}+1. Only maximal
// subsets give distinct c_I images.
bool is_maximal(const Composition& eta, const IndexSubset& I);

// The equivalent characterization stated on nu = c_I(eta) rather than eta.
bool maximality_via_nu(const Composition& eta, const IndexSubset& I);

// All maximal subsets, lexicographically ordered.
std::vector<IndexSubset> maximal_sets(const Composition& eta);

// The support of the degree-p Pieri expansion: all nu reachable by adding a
// box to p rows and rearranging so incremented rows move down or stay while
// the others move up or stay. Deduplicated, lexicographically ordered.
std::vector<Composition> support_J(const Composition& eta, int p);

// The p = N-1 analogue of c_I: nu_{t_1} = eta_{t_s},
// nu_{t_u} = eta_{t_{u-1}}+1 (u >= 2), nu_k = eta_k+1 off I.
Composition hat_c_I(const Composition& eta, const IndexSubset& I);

bool is_hat_maximal(const Composition& eta, const IndexSubset& I);

std::vector<IndexSubset> hat_maximal_sets(const Composition& eta);

// Index shift matching phi_action: {j-1 : j in I, j >= 1} plus {N-1 if 0 in I}.
IndexSubset phi_of_I(const IndexSubset& I, int n);

}  // namespace nsjack

#endif  // NSJACK_SUBSETS_HPP
