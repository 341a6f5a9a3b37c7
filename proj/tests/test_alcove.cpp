#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "qkc/alcove.hpp"

using namespace qkc;

namespace {

// all weights with coordinates in [-2, 2]
std::vector<Weight> small_weights(int n) {
  std::vector<Weight> out;
  std::vector<int> c(n, -2);
  while (true) {
    out.emplace_back(c);
    int i = 0;
    while (i < n && c[i] == 2) c[i++] = -2;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

int expected_chain_length(const Weight& lambda) {
  int total = 0;
  for (const Root& a : positive_roots(lambda.rank())) total += std::abs(pairing(lambda, a));
  return total;
}

bool in_fundamental_alcove(const std::vector<Rational>& x) {
  int n = static_cast<int>(x.size());
  for (const Root& a : positive_roots(n)) {
    Coroot cv = a.coroot(n);
    Rational pair(0, 1);
    for (int i = 0; i < n; ++i) pair = pair + x[i] * cv[i];
    if (!(Rational(0, 1) < pair && pair < Rational(1, 1))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("base point is interior to the fundamental alcove") {
  for (int n = 1; n <= 4; ++n)
    for (int seed = 0; seed <= 3; ++seed) CHECK(in_fundamental_alcove(alcove_base_point(n, seed)));
}

TEST_CASE("rank-1 chains") {
  CHECK(reduced_chain(Weight(std::vector<int>{0})).steps.empty());

  LambdaChain up = reduced_chain(eps_J(1, {1}, +1));
  REQUIRE(up.steps.size() == 1);
  CHECK(up.steps[0].gamma == Root(RootKind::twice, 1, 1));
  CHECK(up.steps[0].level == 0);

  LambdaChain down = reduced_chain(eps_J(1, {1}, -1));
  REQUIRE(down.steps.size() == 1);
  CHECK(down.steps[0].gamma == Root(RootKind::twice, 1, 1, true));
  CHECK(down.steps[0].level == 1);
}

TEST_CASE("chain for eps_1 + eps_2 has four steps") {
  CHECK(reduced_chain(eps_J(2, {1, 2})).steps.size() == 4);
}

TEST_CASE("chain length equals the separating-hyperplane count") {
  for (int n = 1; n <= 3; ++n) {
    for (const Weight& l : small_weights(n)) {
      for (int seed : {0, 1}) {
        CAPTURE(l.str());
        CHECK(static_cast<int>(reduced_chain(l, seed).steps.size()) == expected_chain_length(l));
      }
    }
  }
}

TEST_CASE("replaying the steps lands in the translated alcove") {
  for (int n = 1; n <= 3; ++n) {
    for (const Weight& l : small_weights(n)) {
      LambdaChain chain = reduced_chain(l);
      std::vector<Rational> x = alcove_base_point(n, 0);
      for (const ChainStep& s : chain.steps) x = affine_reflect(s, x);
      // x + lambda must be interior to the fundamental alcove
      for (int i = 0; i < n; ++i) x[i] = x[i] + Rational(l[i], 1);
      CAPTURE(l.str());
      CHECK(in_fundamental_alcove(x));
    }
  }
}

TEST_CASE("affine reflections") {
  ChainStep linear{Root(RootKind::twice, 1, 1), 0};
  CHECK(affine_reflect(linear, eps_J(1, {1})) == eps_J(1, {1}, -1));
  // eps_1 lies on the wall of (-2e_1, level 1), hence is fixed
  ChainStep wall{Root(RootKind::twice, 1, 1, true), 1};
  CHECK(affine_reflect(wall, eps_J(1, {1})) == eps_J(1, {1}));
  // involution on a rank-3 sample
  std::vector<Weight> ws = small_weights(3);
  ChainStep s{Root(RootKind::sum, 1, 3, true), 2};
  for (std::size_t i = 0; i < ws.size(); i += 11)
    CHECK(affine_reflect(s, affine_reflect(s, ws[i])) == ws[i]);
}

TEST_CASE("negative labels of an eps_J chain") {
  // for lambda = eps_J the negative steps carry exactly the roots
  // (i, j) with i < j, i not in J, j in J, each once
  int n = 3;
  auto subsets = std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  for (const auto& J : subsets) {
    std::vector<bool> in(n + 1, false);
    for (int j : J) in[j] = true;
    std::vector<Root> expected;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (!in[i] && in[j]) expected.push_back(Root(RootKind::diff, i, j));
    std::vector<Root> got;
    for (const ChainStep& s : reduced_chain(eps_J(n, J)).steps)
      if (!s.gamma.is_positive()) got.push_back(s.gamma.abs());
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CAPTURE(J.size());
    CHECK(got == expected);
  }
}

TEST_CASE("rational guards") {
  CHECK_THROWS(Rational(1, 0));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
}
