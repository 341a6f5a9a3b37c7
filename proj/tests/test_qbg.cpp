#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qkc/qbg.hpp"

using namespace qkc;

TEST_CASE("rank-1 edges") {
  Root a(RootKind::twice, 1, 1);
  SignedPerm e = SignedPerm::identity(1), s1(std::vector<int>{-1});
  CHECK(edge_type_by_length(e, a) == EdgeKind::Bruhat);
  CHECK(edge_type_by_length(s1, a) == EdgeKind::Quantum);
  CHECK(edge_type_by_pattern(e, a) == EdgeKind::Bruhat);
  CHECK(edge_type_by_pattern(s1, a) == EdgeKind::Quantum);
}

TEST_CASE("rank-2 sign condition blocks the long-root edge at the identity") {
  SignedPerm e = SignedPerm::identity(2);
  Root sum(RootKind::sum, 1, 2);
  CHECK(edge_type_by_length(e, sum) == EdgeKind::None);
  CHECK(edge_type_by_pattern(e, sum) == EdgeKind::None);
  CHECK(edge_type_by_pattern(e, Root(RootKind::diff, 1, 2)) == EdgeKind::Bruhat);
}

TEST_CASE("criteria agree exhaustively up to rank 3") {
  for (int n = 1; n <= 3; ++n) {
    const auto roots = positive_roots(n);
    for (const SignedPerm& w : all_elements(n)) {
      for (const Root& a : roots) {
        CAPTURE(w.str());
        CAPTURE(a.str());
        CHECK(edge_type_by_length(w, a) == edge_type_by_pattern(w, a));
      }
    }
  }
}

TEST_CASE("quantum edges drop the length by exactly 2<rho,coroot> - 1") {
  for (int n = 1; n <= 3; ++n) {
    Weight rho = Weight::rho(n);
    for (const SignedPerm& w : all_elements(n)) {
      for (const Root& a : positive_roots(n)) {
        if (edge_type_by_pattern(w, a) == EdgeKind::Quantum)
          CHECK(w.reflect(a).length() - w.length() == 1 - 2 * pairing(rho, a));
      }
    }
  }
}

TEST_CASE("every non-extreme element has edges both ways") {
  for (int n = 1; n <= 3; ++n) {
    for (const SignedPerm& w : all_elements(n)) {
      bool has_up = false, has_down = false;
      for (const Root& a : positive_roots(n)) {
        EdgeKind k = edge_type_by_pattern(w, a);
        if (k == EdgeKind::None) continue;
        if (w.reflect(a).length() > w.length()) has_up = true;
        if (w.reflect(a).length() < w.length()) has_down = true;
      }
      if (w != SignedPerm::longest(n)) CHECK(has_up);
      if (!w.is_identity()) CHECK(has_down);
    }
  }
}

TEST_CASE("bruhat edges match the cover relation in length") {
  for (const SignedPerm& w : all_elements(3)) {
    for (const Root& a : positive_roots(3)) {
      EdgeKind k = edge_type_by_pattern(w, a);
      int diff = w.reflect(a).length() - w.length();
      if (k == EdgeKind::Bruhat) CHECK(diff == 1);
      if (diff == 1) CHECK(k == EdgeKind::Bruhat);
    }
  }
}

TEST_CASE("negative roots are rejected") {
  SignedPerm e = SignedPerm::identity(2);
  CHECK_THROWS(edge_type_by_pattern(e, Root(RootKind::diff, 1, 2, true)));
  CHECK_THROWS(edge_type_by_length(e, Root(RootKind::twice, 1, 1, true)));
}
