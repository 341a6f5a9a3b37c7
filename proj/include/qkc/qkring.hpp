// Ring-level classes over the Chevalley engine: line bundles, wedge powers
// of the tautological subbundles, lambda_y polynomials, and products of
// such classes.
//
// Every product is evaluated operator-on-class: the left factor is a linear
// combination of line-bundle weights +-eps_J (a LineCombo) acting through
// the quantum Chevalley operator, extended over Novikov scalars. Degenerate
// indices follow the standing conventions: S_0 and S_{-1} are the zero
// bundle, wedge degree 0 is the unit, wedge degree above the rank is zero.

#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "qkc/chevalley.hpp"
#include "qkc/polyring.hpp"

namespace qkc {

struct LineTerm {
  NovikovPoly scalar;
  Weight weight;  // +-eps_J
};

using LineCombo = std::vector<LineTerm>;

// lambda_y coefficients by y-degree
using LambdaYPoly = std::vector<QKClass>;

inline QKClass line_bundle_class(Engine& eng, const Weight& lambda) {
  return eng.quantum_row(lambda, SignedPerm::identity(eng.rank()));
}

namespace detail {

inline void subsets_of_prefix(int k, int d, const std::function<void(const std::vector<int>&)>& fn) {
  // d-element subsets of [1,k], lexicographic
  if (d < 0 || d > k) return;
  std::vector<int> J(d);
  std::function<void(int, int)> rec = [&](int start, int pos) {
    if (pos == d) {
      fn(J);
      return;
    }
    for (int v = start; v <= k - (d - pos - 1); ++v) {
      J[pos] = v;
      rec(v + 1, pos + 1);
    }
  };
  rec(1, 0);
}

}  // namespace detail

// [wedge^d S_k] (dual = false) or [wedge^d S_k^vee] (dual = true) as the sum
// of line-bundle classes over d-element subsets of [1,k]. k may be -1 or 0
// (the zero bundle); d > k gives the zero class, d = 0 the unit.
inline QKClass wedge_class(Engine& eng, int k, int d, bool dual) {
  int n = eng.rank(), D = eng.trunc_degree();
  if (k > n) throw std::invalid_argument("wedge_class: k out of range");
  if (d == 0) return QKClass::unit(n, D);
  if (k < 1 || d < 0 || d > k) return QKClass(n, D);
  QKClass out(n, D);
  detail::subsets_of_prefix(k, d, [&](const std::vector<int>& J) {
    out += line_bundle_class(eng, eps_J(n, J, dual ? 1 : -1));
  });
  return out;
}

// operator form of the same wedge class
inline LineCombo wedge_combo(Engine& eng, int k, int d, bool dual) {
  int n = eng.rank(), D = eng.trunc_degree();
  LineCombo out;
  if (d == 0) {
    out.push_back({NovikovPoly::one(n, D), Weight(n)});
    return out;
  }
  if (k < 1 || d < 0 || d > k) return out;
  detail::subsets_of_prefix(k, d, [&](const std::vector<int>& J) {
    out.push_back({NovikovPoly::one(n, D), eps_J(n, J, dual ? 1 : -1)});
  });
  return out;
}

inline QKClass mult(Engine& eng, const LineCombo& combo, const QKClass& z) {
  QKClass out(eng.rank(), eng.trunc_degree());
  for (const LineTerm& t : combo) {
    if (t.scalar.is_zero()) continue;
    out += eng.quantum_line_mult(t.weight, z) * t.scalar;
  }
  return out;
}

inline LambdaYPoly poly_mult(Engine& eng, const std::vector<LineCombo>& p, const LambdaYPoly& r) {
  int n = eng.rank(), D = eng.trunc_degree();
  if (p.empty() || r.empty()) return {};
  LambdaYPoly out(p.size() + r.size() - 1, QKClass(n, D));
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].empty()) continue;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j].is_zero()) continue;
      out[i + j] += mult(eng, p[i], r[j]);
    }
  }
  return out;
}

// lambda_y(S_k) / lambda_y(S_k^vee) as classes by y-degree; k in [-1, n]
inline LambdaYPoly lambda_y_sub(Engine& eng, int k, bool dual) {
  int n = eng.rank(), D = eng.trunc_degree();
  LambdaYPoly out;
  if (k <= 0) {
    out.push_back(QKClass::unit(n, D));
    return out;
  }
  for (int d = 0; d <= k; ++d) out.push_back(wedge_class(eng, k, d, dual));
  return out;
}

// the same polynomial in operator form
inline std::vector<LineCombo> lambda_y_sub_combo(Engine& eng, int k, bool dual) {
  int n = eng.rank(), D = eng.trunc_degree();
  std::vector<LineCombo> out;
  if (k <= 0) {
    out.push_back(LineCombo{{NovikovPoly::one(n, D), Weight(n)}});
    return out;
  }
  for (int d = 0; d <= k; ++d) out.push_back(wedge_combo(eng, k, d, dual));
  return out;
}

// lambda_y(S_k/S_{k-1}) or its dual: 1 + y [O(-+eps_k)]
inline LambdaYPoly lambda_y_quotient(Engine& eng, int k, bool dual) {
  int n = eng.rank(), D = eng.trunc_degree();
  LambdaYPoly out;
  out.push_back(QKClass::unit(n, D));
  out.push_back(line_bundle_class(eng, eps_J(n, {k}, dual ? 1 : -1)));
  return out;
}

// lambda_y of the trivial rank-2n bundle: scalar coefficients e_d
inline LambdaYPoly lambda_y_trivial(Engine& eng) {
  int n = eng.rank(), D = eng.trunc_degree();
  LambdaYPoly out;
  for (int d = 0; d <= 2 * n; ++d)
    out.push_back(QKClass::unit(n, D) * elementary_symmetric_char(d, n));
  return out;
}

struct Bundle {
  enum Kind { sub, sub_dual, quotient, quotient_dual, trivial } kind;
  int k = 0;
};

inline LambdaYPoly lambda_y(Engine& eng, const Bundle& b) {
  switch (b.kind) {
    case Bundle::sub: return lambda_y_sub(eng, b.k, false);
    case Bundle::sub_dual: return lambda_y_sub(eng, b.k, true);
    case Bundle::quotient: return lambda_y_quotient(eng, b.k, false);
    case Bundle::quotient_dual: return lambda_y_quotient(eng, b.k, true);
    case Bundle::trivial: return lambda_y_trivial(eng);
  }
  throw std::logic_error("lambda_y: unreachable");
}

}  // namespace qkc
