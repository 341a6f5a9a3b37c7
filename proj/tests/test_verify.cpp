#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qkc/verify.hpp"

using namespace qkc;

TEST_CASE("whitney relation 1") {
  VerifyContext c1(1, 3);
  CHECK(check_whitney_rel1(c1, 1).pass);
  VerifyContext c2(2, 3);
  CHECK(check_whitney_rel1(c2, 1).pass);
  CHECK(check_whitney_rel1(c2, 2).pass);

  CheckResult mutated = check_whitney_rel1(c2, 2, Mutation::drop_correction);
  CHECK_FALSE(mutated.pass);
  CHECK(!mutated.residual.empty());
  // the residual lives in the Q_1 coefficient
  CHECK(mutated.residual.find("Q^(1") != std::string::npos);
}

TEST_CASE("whitney relation 2") {
  VerifyContext c1(1, 3);
  CHECK(check_whitney_rel2(c1, 1).pass);
  VerifyContext c2(2, 3);
  CHECK(check_whitney_rel2(c2, 2).pass);
  CHECK_FALSE(check_whitney_rel2(c2, 2, Mutation::drop_correction).pass);
}

TEST_CASE("whitney relation 3") {
  VerifyContext c1(1, 3);
  CHECK(check_whitney_rel3(c1).pass);
  VerifyContext c2(2, 3);
  CHECK(check_whitney_rel3(c2).pass);
  CHECK_FALSE(check_whitney_rel3(c2, Mutation::drop_correction).pass);
}

TEST_CASE("rank-1 whitney relation 3 by hand") {
  // both sides at y^2 reduce to e_2 - Q_1 = 1 - Q_1 at rank 1
  VerifyContext cx(1, 3);
  Engine& E = cx.eng;
  QKClass y2 = mult(E, wedge_combo(E, 1, 1, false), wedge_class(E, 1, 1, true));
  NovikovPoly expect = NovikovPoly::scalar(elementary_symmetric_char(2, 1), 1, 3) -
                       NovikovPoly::q(1, 1, 3);
  CHECK(y2 == QKClass::unit(1, 3) * expect);
}

TEST_CASE("quantum inverse") {
  VerifyContext c1(1, 4);
  CHECK(check_quantum_inverse(c1, 1).pass);
  VerifyContext c2(2, 4);
  CHECK(check_quantum_inverse(c2, 1).pass);
  CHECK(check_quantum_inverse(c2, 2).pass);
  CHECK_FALSE(check_quantum_inverse(c2, 2, Mutation::drop_correction).pass);
}

TEST_CASE("quantum inverse pass is independent of the truncation degree") {
  for (int D : {1, 2, 3, 4}) {
    VerifyContext cx(2, D);
    CHECK(check_quantum_inverse(cx, 1).pass);
    CHECK(check_quantum_inverse(cx, 2).pass);
  }
}

TEST_CASE("pass status is independent of the truncation degree") {
  for (int D : {1, 2, 4}) {
    VerifyContext cx(2, D);
    CHECK(check_whitney_rel1(cx, 2).pass);
    CHECK(check_borel(cx, 2).pass);
    CHECK(check_multiple_line(cx, {1}, 2, -1).pass);
  }
}

TEST_CASE("whitney relation 2 at rank 3, low truncation") {
  VerifyContext c3(3, 2);
  CHECK(check_whitney_rel2(c3, 3).pass);
}

TEST_CASE("borel relation") {
  VerifyContext c1(1, 4);
  for (int d = 0; d <= 2; ++d) CHECK(check_borel(c1, d).pass);
  VerifyContext c2(2, 3);
  for (int d = 0; d <= 4; ++d) CHECK(check_borel(c2, d).pass);
  CHECK_FALSE(check_borel(c2, 2, Mutation::drop_correction).pass);
}

TEST_CASE("multiple line bundle identities") {
  VerifyContext c2(2, 3);
  CHECK(check_multiple_line(c2, {1}, 2, -1).pass);
  CHECK(check_multiple_line(c2, {1}, 2, +1).pass);
  CHECK(check_multiple_line(c2, {}, 2, -1).pass);
  VerifyContext c3(3, 2);
  CHECK(check_multiple_line(c3, {1}, 3, -1).pass);
  CHECK(check_multiple_line(c3, {2}, 3, -1).pass);
}

TEST_CASE("product lemmas") {
  VerifyContext c1(1, 3);
  CHECK(check_lemma_products(c1, 2, 1).pass);
  VerifyContext c2(2, 3);
  CHECK(check_lemma_products(c2, 2, 2).pass);
  // away from d = 2 both sides of the p = 1 split vanish
  CHECK(check_lemma_products(c2, 1, 1).pass);
  CHECK(check_lemma_products(c2, 3, 1).pass);
  CHECK(check_lemma_products(c2, 4, 1).pass);
  CHECK(detail::paired_product_sum(c2.eng, 1, 1).is_zero());
  CHECK(detail::paired_product_sum(c2.eng, 3, 1).is_zero());
}

TEST_CASE("presentation ideal generators vanish") {
  VerifyContext c1(1, 3);
  CHECK(check_presentation(c1).pass);
  VerifyContext c2(2, 3);
  CHECK(check_presentation(c2).pass);
  CheckResult mutated = check_presentation(c2, Mutation::drop_correction);
  CHECK_FALSE(mutated.pass);
}

TEST_CASE("classical limit") {
  VerifyContext c1(1, 1);
  CHECK(check_classical_limit(c1).pass);
  VerifyContext c2(2, 1);
  CHECK(check_classical_limit(c2).pass);
}

TEST_CASE("elementary symmetric oracle examples") {
  // recursion at (k, d) = (3, 2) and the rank-2 convolution at d = 2
  int n = 3;
  std::vector<Weight> xs;
  for (int i = 1; i <= n; ++i) xs.push_back(eps_J(n, {i}, +1));
  std::vector<Weight> pre(xs.begin(), xs.begin() + 3), pre1(xs.begin(), xs.begin() + 2);
  CHECK(detail::elementary_by_subsets(n, pre, 2) ==
        detail::elementary_by_subsets(n, pre1, 2) +
            detail::elementary_by_subsets(n, pre1, 1) * CharElem::monomial(xs[2]));

  int n2 = 2;
  std::vector<Weight> ys, ys_inv, all;
  for (int i = 1; i <= n2; ++i) ys.push_back(eps_J(n2, {i}, +1));
  for (int i = 1; i <= n2; ++i) ys_inv.push_back(eps_J(n2, {i}, -1));
  all = ys;
  for (int i = n2; i >= 1; --i) all.push_back(eps_J(n2, {i}, -1));
  CharElem conv;
  for (int k = 0; k <= 2; ++k)
    conv += detail::elementary_by_subsets(n2, ys, k) *
            detail::elementary_by_subsets(n2, ys_inv, 2 - k);
  CHECK(conv == detail::elementary_by_subsets(n2, all, 2));
}

TEST_CASE("qam checks") {
  VerifyContext c2(2, 2);
  CHECK(check_qam_am(c2, {1, 2}, +1).pass);
  CHECK(check_qam_am(c2, {1}, -1).pass);
  VerifyContext c3(3, 2);
  CHECK(check_qam_am(c3, {2}, -1).pass);
}

TEST_CASE("chain independence checks") {
  VerifyContext c2(2, 3);
  CHECK(check_chain_independence(c2, {1, 2}, +1).pass);
  CHECK(check_chain_independence(c2, {2}, -1).pass);
}

TEST_CASE("edge equivalence and degenerations") {
  VerifyContext c2(2, 2);
  CHECK(check_edge_equivalence(c2).pass);
  CHECK(check_q0_degeneration(c2).pass);
  CHECK(check_rank1_oracle(c2).pass);
}

TEST_CASE("results are pure and idempotent") {
  VerifyContext cx(2, 2);
  CheckResult a = check_whitney_rel1(cx, 2);
  CheckResult b = check_whitney_rel1(cx, 2);
  CHECK(a.pass == b.pass);
  CHECK(a.residual == b.residual);
  CHECK(a.name == b.name);
  CHECK(a.params == b.params);
  // residual empty iff pass, also on a failing check
  CheckResult bad = check_quantum_inverse(cx, 2, Mutation::drop_correction);
  CHECK(bad.pass == bad.residual.empty());
  CheckResult bad2 = check_quantum_inverse(cx, 2, Mutation::drop_correction);
  CHECK(bad.residual == bad2.residual);
}

TEST_CASE("exact division helper") {
  CharElem sky = CharElem::unit(1) - CharElem::monomial(Weight(std::vector<int>{-2}));
  CharElem prod = sky * (CharElem::monomial(Weight(std::vector<int>{3}), 5) -
                         CharElem::monomial(Weight(std::vector<int>{-1})));
  CHECK(detail::divide_exact(prod, sky) ==
        CharElem::monomial(Weight(std::vector<int>{3}), 5) -
            CharElem::monomial(Weight(std::vector<int>{-1})));
  CHECK_THROWS(detail::divide_exact(CharElem::unit(1), sky));
}
