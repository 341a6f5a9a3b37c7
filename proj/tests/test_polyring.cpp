#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qkc/polyring.hpp"

using namespace qkc;

namespace {

CharElem mono(std::vector<int> e, long long c = 1) {
  return CharElem::monomial(Weight(std::move(e)), c);
}

}  // namespace

TEST_CASE("bigint arithmetic") {
  CHECK(BigInt(0).is_zero());
  CHECK((BigInt(7) + BigInt(-7)).is_zero());
  // 998244353 * 10^9 + 998244353 * 7
  CHECK((BigInt(1000000007LL) * BigInt(998244353LL)).to_string() == "998244359987710471");
  CHECK((BigInt(-5) * BigInt(3)).to_ll() == -15);
  CHECK(BigInt(-12).to_string() == "-12");
  // 2^96 via repeated multiplication
  BigInt p = 1;
  for (int i = 0; i < 96; ++i) p = p * 2;
  CHECK(p.to_string() == "79228162514264337593543950336");
  CHECK((p - p).is_zero());
  CHECK(BigInt(-3) < BigInt(2));
  CHECK(BigInt(2) < BigInt(10));
  // 30! exact
  BigInt f = 1;
  for (int i = 2; i <= 30; ++i) f = f * i;
  CHECK(f.to_string() == "265252859812191058636308480000000");
}

TEST_CASE("character ring basics") {
  CharElem a = mono({1, 0}) + mono({0, 1}, 2);
  CharElem b = mono({-1, 0}) - mono({0, 1});
  CHECK(a * b == b * a);
  CHECK((a - a).is_zero());
  CHECK(mono({1, 0}) * mono({-1, 2}) == mono({0, 2}));
  CHECK(a.conj() == mono({-1, 0}) + mono({0, -1}, 2));

  // distributivity on a sample
  CharElem c = mono({2, -1}, 3) - mono({0, 0});
  CHECK(a * (b + c) == a * b + a * c);
  CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("elementary symmetric characters") {
  CHECK(elementary_symmetric_char(0, 2) == CharElem::unit(2));
  CHECK(elementary_symmetric_char(1, 1) == mono({1}) + mono({-1}));
  for (int n = 1; n <= 3; ++n) CHECK(elementary_symmetric_char(2 * n, n) == CharElem::unit(n));
  CHECK_THROWS(elementary_symmetric_char(5, 2));
  CHECK_THROWS(elementary_symmetric_char(-1, 2));
  // palindromic: e_d = e_{2n-d} for the self-dual variable set
  for (int n = 2; n <= 3; ++n)
    for (int d = 0; d <= n; ++d)
      CHECK(elementary_symmetric_char(d, n) == elementary_symmetric_char(2 * n - d, n));
}

TEST_CASE("novikov polynomial arithmetic and truncation") {
  int n = 2, D = 3;
  NovikovPoly one = NovikovPoly::one(n, D);
  NovikovPoly q1 = NovikovPoly::q(1, n, D), q2 = NovikovPoly::q(2, n, D);
  CHECK((one - one).is_zero());
  CHECK(q1 * q2 == q2 * q1);
  // truncation drops the overflow term
  NovikovPoly q1sq = q1 * q1;
  CHECK((q1sq * q1sq).is_zero());

  // truncation coherence: computing at D then cutting equals computing at D'
  NovikovPoly a = (one + q1 + q2) * (one - q1 * q2) + q2 * q2;
  NovikovPoly a1 = a.truncate_to(1);
  NovikovPoly oneL = NovikovPoly::one(n, 1), q1L = NovikovPoly::q(1, n, 1),
              q2L = NovikovPoly::q(2, n, 1);
  CHECK(a1 == (oneL + q1L + q2L) * (oneL - q1L * q2L) + q2L * q2L);

  CHECK_THROWS(oneL + one);  // mismatched truncation degree
  CHECK_THROWS(NovikovPoly::q(3, 2, 3));

  // coherence holds for the series constructors too
  for (int j = 0; j <= n; ++j)
    CHECK(geometric_factor(j, n, D).truncate_to(1) == geometric_factor(j, n, 1));
  Coroot xi = Root(RootKind::sum, 1, 2).coroot(2);
  CHECK(q_monomial_of_coroot(xi, 3).truncate_to(1) == q_monomial_of_coroot(xi, 1));
}

TEST_CASE("geometric factor") {
  int n = 2, D = 3;
  CHECK(geometric_factor(0, n, D) == NovikovPoly::one(n, D));
  NovikovPoly g1 = geometric_factor(1, n, D);
  NovikovPoly expect = NovikovPoly::one(n, D);
  NovikovPoly q1 = NovikovPoly::q(1, n, D);
  expect += q1;
  expect += q1 * q1;
  expect += q1 * q1 * q1;
  CHECK(g1 == expect);
  // (1 - Q_j) * geom(j) = 1 up to the truncation degree
  for (int j = 1; j <= n; ++j) {
    NovikovPoly lhs = (NovikovPoly::one(n, D) - NovikovPoly::q(j, n, D)) *
                      geometric_factor(j, n, D);
    CHECK(lhs == NovikovPoly::one(n, D));
  }
}

TEST_CASE("q monomial of coroot") {
  int D = 3;
  // (2e_2)^vee = eps_2^vee at n = 2 -> Q_2
  CHECK(q_monomial_of_coroot(Root(RootKind::twice, 2, 2).coroot(2), D) ==
        NovikovPoly::q(2, 2, D));
  // alpha_1^vee = e_1 - e_2 -> Q_1
  CHECK(q_monomial_of_coroot(simple_coroot(2, 1), D) == NovikovPoly::q(1, 2, D));
  CHECK(q_monomial_of_coroot(Coroot(2), D) == NovikovPoly::one(2, D));
  // additivity where degrees permit
  Coroot xi = Root(RootKind::sum, 1, 2).coroot(2);  // e_1 + e_2
  CHECK(q_monomial_of_coroot(xi, D) ==
        q_monomial_of_coroot(simple_coroot(2, 1), D) *
            q_monomial_of_coroot(Coroot(std::vector<int>{0, 2}), D));
  // outside the positive cone
  CHECK_THROWS(q_monomial_of_coroot(Coroot(std::vector<int>{-1, 1}), D));
  // beyond truncation: dropped, not an error
  CHECK(q_monomial_of_coroot(Coroot(std::vector<int>{4, 0}), D).is_zero());
}

TEST_CASE("class container equality semantics") {
  int n = 1, D = 2;
  QKClass a = QKClass::unit(n, D);
  CHECK(qk_equal(a, a));
  // a term beyond the truncation degree is invisible
  QKClass b = a;
  NovikovPoly high(n, D);
  ExpVec e{D + 1};
  high.add_term(e, CharElem::unit(n));  // dropped by degree
  b.add_term(SignedPerm::identity(n), high);
  CHECK(qk_equal(a, b));
  QKClass c = a + QKClass::unit(n, D);
  CHECK_FALSE(qk_equal(a, c));
  QKClass other(n, D + 1);
  CHECK_THROWS((void)qk_equal(a, other));
}

TEST_CASE("renderings are canonical") {
  CharElem a = mono({-1, 0}) - mono({1, 0}, 2) + mono({0, 0}, 5);
  CHECK(a.str() == "e^(-1,0) + 5 - 2*e^(1,0)");
  NovikovPoly p(2, 2);
  p.add_term(ExpVec{0, 0}, CharElem::unit(2));
  p.add_term(ExpVec{1, 0}, -CharElem::unit(2));
  CHECK(p.str() == "(1) + (-1)*Q^(1,0)");
  CHECK(NovikovPoly::zero(2, 2).str() == "0");
  QKClass z(1, 1);
  CHECK(z.str() == "0");
}
