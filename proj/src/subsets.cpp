#include "nsjack/subsets.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace nsjack {

std::vector<IndexSubset> all_subsets(int n) {
  std::vector<IndexSubset> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    IndexSubset s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Composition c_I(const Composition& eta, const IndexSubset& I) {
  assert(!I.empty());
  Composition nu = eta;
  const int s = static_cast<int>(I.size());
  for (int j = 0; j + 1 < s; ++j) nu[I[j]] = eta[I[j + 1]];
  nu[I[s - 1]] = eta[I[0]] + 1;
  return nu;
}

bool is_maximal(const Composition& eta, const IndexSubset& I) {
  if (I.empty()) return false;
  const int n = static_cast<int>(eta.size());
  const int s = static_cast<int>(I.size());
  // No part strictly between consecutive cycle indices may equal the part it
  // would shadow; nothing after the last index may equal eta_{t_1}+1.
  for (int u = 0; u < s; ++u) {
    const int lo = (u == 0) ? 0 : I[u - 1] + 1;
    for (int j = lo; j < I[u]; ++j)
      if (eta[j] == eta[I[u]]) return false;
  }
  for (int j = I[s - 1] + 1; j < n; ++j)
    if (eta[j] == eta[I[0]] + 1) return false;
  return true;
}

bool maximality_via_nu(const Composition& eta, const IndexSubset& I) {
  if (I.empty()) return false;
  const int n = static_cast<int>(eta.size());
  const int s = static_cast<int>(I.size());
  const Composition nu = c_I(eta, I);
  for (int j = 0; j < I[0]; ++j)
    if (nu[j] == nu[I[s - 1]] - 1) return false;
  for (int u = 0; u < s; ++u) {
    const int hi = (u + 1 < s) ? I[u + 1] : n;
    for (int j = I[u] + 1; j < hi; ++j)
      if (nu[j] == nu[I[u]]) return false;
  }
  return true;
}

std::vector<IndexSubset> maximal_sets(const Composition& eta) {
  std::vector<IndexSubset> out;
  for (const auto& I : all_subsets(static_cast<int>(eta.size())))
    if (is_maximal(eta, I)) out.push_back(I);
  return out;
}

std::vector<Composition> support_J(const Composition& eta, int p) {
  const int n = static_cast<int>(eta.size());
  assert(p >= 0 && p <= n);
  std::vector<Composition> out;

  // Choose the incremented rows, then try every rearrangement in which
  // incremented rows move down or stay and the rest move up or stay.
  std::vector<int> rows(n);
  std::iota(rows.begin(), rows.end(), 0);
  std::vector<bool> chosen(n, false);

  Permutation sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  auto choose = [&](auto&& self, int start, int left) -> void {
    if (left == 0) {
      Permutation perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        bool admissible = true;
        for (int i = 0; i < n && admissible; ++i)
          admissible = chosen[i] ? perm[i] >= i : perm[i] <= i;
        if (!admissible) continue;
        Composition nu(n);
        for (int i = 0; i < n; ++i) nu[perm[i]] = eta[i] + (chosen[i] ? 1 : 0);
        out.push_back(std::move(nu));
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (int i = start; i + left <= n; ++i) {
      chosen[i] = true;
      self(self, i + 1, left - 1);
      chosen[i] = false;
    }
  };
  choose(choose, 0, p);

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Composition hat_c_I(const Composition& eta, const IndexSubset& I) {
  assert(!I.empty());
  const int s = static_cast<int>(I.size());
  Composition nu = plus_ones(eta);
  nu[I[0]] = eta[I[s - 1]];
  for (int u = 1; u < s; ++u) nu[I[u]] = eta[I[u - 1]] + 1;
  return nu;
}

bool is_hat_maximal(const Composition& eta, const IndexSubset& I) {
  if (I.empty()) return false;
  const int n = static_cast<int>(eta.size());
  const int s = static_cast<int>(I.size());
  for (int j = 0; j < I[0]; ++j)
    if (eta[j] == eta[I[s - 1]] - 1) return false;
  for (int u = 0; u < s; ++u) {
    const int hi = (u + 1 < s) ? I[u + 1] : n;
    for (int j = I[u] + 1; j < hi; ++j)
      if (eta[j] == eta[I[u]]) return false;
  }
  return true;
}

std::vector<IndexSubset> hat_maximal_sets(const Composition& eta) {
  std::vector<IndexSubset> out;
  for (const auto& I : all_subsets(static_cast<int>(eta.size())))
    if (is_hat_maximal(eta, I)) out.push_back(I);
  return out;
}

IndexSubset phi_of_I(const IndexSubset& I, int n) {
  IndexSubset out;
  for (int j : I)
    if (j >= 1) out.push_back(j - 1);
  if (!I.empty() && I.front() == 0) out.push_back(n - 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nsjack
