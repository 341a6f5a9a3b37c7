// Edge queries on the quantum Bruhat graph of the hyperoctahedral group.
//
// Two independent criteria are implemented. The length criterion compares
// l(w s_alpha) - l(w) against +1 (Bruhat) and 1 - 2<rho, alpha^vee>
// (quantum) and is the oracle. The pattern criterion decides the same
// question by inspecting the extended window on the barred interval
// 1 < 2 < ... < n < bar n < ... < bar 1 and is the production path; the
// two are cross-checked exhaustively in the test suite.

#pragma once

#include "qkc/rootsys.hpp"

namespace qkc {

enum class EdgeKind { None, Bruhat, Quantum };

inline const char* edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::Bruhat: return "Bruhat";
    case EdgeKind::Quantum: return "Quantum";
    default: return "None";
  }
}

inline EdgeKind edge_type_by_length(const SignedPerm& w, const Root& alpha) {
  if (!alpha.is_positive()) throw std::invalid_argument("edge query needs a positive root");
  int n = w.rank();
  int l0 = w.length();
  int l1 = w.reflect(alpha).length();
  if (l1 == l0 + 1) return EdgeKind::Bruhat;
  if (l1 == l0 + 1 - 2 * pairing(Weight::rho(n), alpha)) return EdgeKind::Quantum;
  return EdgeKind::None;
}

namespace detail {

// Rank of a window value in the barred order: positive k has rank k,
// barred k (stored as -k) has rank 2n+1-k.
inline int barred_rank(int v, int n) { return v > 0 ? v : 2 * n + 1 + v; }

}  // namespace detail

inline EdgeKind edge_type_by_pattern(const SignedPerm& w, const Root& alpha) {
  if (!alpha.is_positive()) throw std::invalid_argument("edge query needs a positive root");
  int n = w.rank();
  int i = alpha.i(), j = alpha.j();
  auto rk = [n](int v) { return detail::barred_rank(v, n); };

  switch (alpha.kind()) {
    case RootKind::diff: {
      int wi = rk(w(i)), wj = rk(w(j));
      if (wi < wj) {
        for (int k = i + 1; k < j; ++k) {
          int wk = rk(w(k));
          if (wi < wk && wk < wj) return EdgeKind::None;
        }
        return EdgeKind::Bruhat;
      }
      // wi > wj: quantum requires every intermediate value strictly between
      for (int k = i + 1; k < j; ++k) {
        int wk = rk(w(k));
        if (!(wj < wk && wk < wi)) return EdgeKind::None;
      }
      return EdgeKind::Quantum;
    }
    case RootKind::sum: {
      // positions strictly between i and bar j: i+1..n then bar n..bar(j+1)
      int wi = w(i), wbj = w(-j);
      if ((wi > 0) != (wbj > 0)) return EdgeKind::None;
      int a = rk(wi), b = rk(wbj);
      if (a >= b) return EdgeKind::None;
      for (int k = i + 1; k <= n; ++k) {
        int wk = rk(w(k));
        if (a < wk && wk < b) return EdgeKind::None;
      }
      for (int k = n; k >= j + 1; --k) {
        int wk = rk(w(-k));
        if (a < wk && wk < b) return EdgeKind::None;
      }
      return EdgeKind::Bruhat;
    }
    case RootKind::twice: {
      int a = rk(w(i)), b = rk(w(-i));
      if (w(i) > 0) {
        // Bruhat candidate; it suffices to scan unbarred positions i+1..n
        for (int k = i + 1; k <= n; ++k) {
          int wk = rk(w(k));
          if (a < wk && wk < b) return EdgeKind::None;
        }
        return EdgeKind::Bruhat;
      }
      for (int k = i + 1; k <= n; ++k) {
        int wk = rk(w(k));
        if (!(b < wk && wk < a)) return EdgeKind::None;
      }
      return EdgeKind::Quantum;
    }
  }
  return EdgeKind::None;
}

}  // namespace qkc
