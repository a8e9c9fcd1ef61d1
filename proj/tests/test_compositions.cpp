#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "nsjack/composition.hpp"

using namespace nsjack;

namespace {

const std::vector<Rational> kAlphas = {Rational(2), Rational(3),
                                       Rational(5, 2), Rational(7, 3),
                                       Rational(11, 2)};

// Existence form of the composition order: some permutation pi satisfies
// nu_i < eta_{pi(i)} when i < pi(i) and nu_i <= eta_{pi(i)} otherwise.
bool preceq_brute(const Composition& nu, const Composition& eta) {
  const int n = static_cast<int>(nu.size());
  Permutation pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      ok = (i < pi[i]) ? nu[i] < eta[pi[i]] : nu[i] <= eta[pi[i]];
    if (ok) return true;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return false;
}

bool diagram_included(const Composition& nu, const Composition& eta) {
  for (size_t i = 0; i < nu.size(); ++i)
    if (nu[i] > eta[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("eigenvalue vector") {
  const Rational a = 2;
  for (int n = 1; n <= 5; ++n) {
    const auto bar = eta_bar(Composition(n, 0), a);
    for (int i = 0; i < n; ++i) CHECK(bar[i] == Rational(-i));
  }
  for (const auto& alpha : kAlphas) {
    const auto bar = eta_bar({2, 0, 1}, alpha);
    CHECK(bar[0] == 2 * alpha);
    CHECK(bar[1] == -2);
    CHECK(bar[2] == alpha - 1);
  }
  const auto bar = eta_bar({1, 0}, Rational(2));
  CHECK(bar[0] == 2);
  CHECK(bar[1] == -1);
}

TEST_CASE("delta_bar") {
  CHECK(delta_bar({1, 0}, 0, Rational(2)) == 3);
  CHECK(delta_bar({0, 0}, 0, Rational(2)) == 1);
  CHECK(delta_bar({0, 0}, 0, Rational(7, 3)) == 1);
  CHECK(delta_bar({2, 0, 1}, 1, Rational(3)) == -4);
}

TEST_CASE("dominance and triangle orders") {
  CHECK(dominance_less({1, 1}, {2, 0}));
  CHECK(!dominance_less({2, 0}, {1, 1}));
  CHECK(triangle_less({0, 2}, {2, 0}));
  CHECK(!triangle_less({2, 0}, {2, 0}));
  CHECK(!dominance_less({2, 0}, {2, 0}));

  // Strict partial order on each weight class at N=3, |eta| <= 4.
  for (int w = 0; w <= 4; ++w) {
    const auto all = compositions_of_weight(3, w);
    for (const auto& a : all) {
      CHECK(!triangle_less(a, a));
      for (const auto& b : all) {
        if (triangle_less(a, b)) CHECK(!triangle_less(b, a));
        for (const auto& c : all)
          if (triangle_less(a, b) && triangle_less(b, c))
            CHECK(triangle_less(a, c));
      }
    }
  }
}

TEST_CASE("shortest_sorter") {
  CHECK(shortest_sorter({2, 0, 1}) == Permutation{0, 2, 1});
  CHECK(shortest_sorter({3, 2, 2, 0}) == Permutation{0, 1, 2, 3});
  CHECK(shortest_sorter({0, 1}) == Permutation{1, 0});
  // Stability: equal parts keep original relative order.
  CHECK(shortest_sorter({1, 1, 1}) == Permutation{0, 1, 2});
  CHECK(shortest_sorter({0, 2, 2}) == Permutation{1, 2, 0});
}

TEST_CASE("preceq matches the existence form") {
  for (int w1 = 0; w1 <= 3; ++w1) {
    for (int w2 = 0; w2 <= 3; ++w2) {
      for (const auto& nu : compositions_of_weight(3, w1))
        for (const auto& eta : compositions_of_weight(3, w2))
          CHECK(preceq(nu, eta) == preceq_brute(nu, eta));
    }
  }
  CHECK(preceq({1, 0, 2}, {1, 0, 2}));       // reflexive
  CHECK(preceq({1, 0, 1}, {2, 1, 1}));       // componentwise inclusion
}

TEST_CASE("preceq on partitions is diagram inclusion") {
  for (int w1 = 0; w1 <= 4; ++w1) {
    for (int w2 = 0; w2 <= 4; ++w2) {
      for (const auto& nu : compositions_of_weight(3, w1)) {
        if (!is_partition(nu)) continue;
        for (const auto& eta : compositions_of_weight(3, w2)) {
          if (!is_partition(eta)) continue;
          CHECK(preceq(nu, eta) == diagram_included(nu, eta));
        }
      }
    }
  }
}

TEST_CASE("hooks") {
  for (const auto& alpha : kAlphas) {
    for (int n = 1; n <= 4; ++n) {
      const HookData h = hooks(Composition(n, 0), alpha);
      CHECK(h.d_prime == 1);
      CHECK(h.d == 1);
      CHECK(h.e == 1);
      CHECK(h.e_prime == 1);
    }
    const int n = 4;
    for (int j = 0; j < n; ++j) {
      Composition eta(n, 0);
      eta[j] = 1;
      const HookData h = hooks(eta, alpha);
      CHECK(h.d_prime == alpha + j);          // alpha + j - 1 with 1-based j
      CHECK(h.e_prime == alpha + n - 1);
      CHECK(h.e == alpha + n);
    }
  }
}

TEST_CASE("norm_ratio") {
  for (const auto& alpha : kAlphas) {
    CHECK(norm_ratio({0, 0, 0}, alpha) == 1);
    for (const auto& eta : compositions_up_to_weight(3, 3))
      CHECK(norm_ratio(plus_ones(eta), alpha) == norm_ratio(eta, alpha));
  }
}

TEST_CASE("phi and swap actions") {
  CHECK(phi_action({0, 0, 0}) == Composition{0, 0, 1});
  CHECK(phi_action({2, 0, 1}) == Composition{0, 1, 3});
  CHECK(s_action({2, 0, 1}, 0) == Composition{0, 2, 1});
  CHECK(phi_inverse(phi_action({2, 0, 1})) == Composition{2, 0, 1});
}

TEST_CASE("eigenvalue-vector transformation rules") {
  for (const auto& alpha : kAlphas) {
    for (int n = 2; n <= 4; ++n) {
      const int maxw = (n == 4) ? 4 : 6;
      for (const auto& eta : compositions_up_to_weight(n, maxw)) {
        const TransformCheck c = eta_bar_transforms(eta, alpha);
        CHECK_MESSAGE(c.ok, c.detail);
      }
    }
  }
}

TEST_CASE("composition enumeration and parsing") {
  CHECK(compositions_of_weight(2, 1) ==
        std::vector<Composition>{{0, 1}, {1, 0}});
  CHECK(compositions_up_to_weight(3, 0).size() == 1);
  CHECK(compositions_up_to_weight(2, 2).size() == 6);
  CHECK(parse_composition("2,0,1") == Composition{2, 0, 1});
  CHECK(format_composition({2, 0, 1}) == "2,0,1");
  CHECK_THROWS_AS(parse_composition("2,-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_composition(""), std::invalid_argument);
}

TEST_CASE("rational formatting") {
  CHECK(format_rational(Rational(-1, 3)) == "-1/3");
  CHECK(format_rational(Rational(4, 2)) == "2");
  CHECK(parse_rational("5/2") == Rational(5, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}
