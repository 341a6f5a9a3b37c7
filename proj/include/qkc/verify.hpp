// One check per ring identity. Each check builds both sides from the ring
// primitives and reports a structured pass/fail with the rendered residual;
// mathematical failure never throws. The optional mutation knob removes a
// correction term from the relation under test, which the suite uses to
// confirm the checks are not vacuous.

#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "qkc/qkring.hpp"

namespace qkc {

struct CheckResult {
  std::string name;
  std::map<std::string, std::string> params;
  bool pass = false;
  std::string residual;
  double wall_ms = 0.0;
};

enum class Mutation { none, drop_correction };

// Shared engines so chain and operator caches persist across checks.
struct VerifyContext {
  int n, D, seed, seed2;
  Engine eng, eng2;

  VerifyContext(int n_, int D_, int seed_ = 0, int seed2_ = 1)
      : n(n_), D(D_), seed(seed_), seed2(seed2_),
        eng(n_, D_, seed_), eng2(n_, D_, seed2_) {
    if (seed_ == seed2_) throw std::invalid_argument("VerifyContext: seeds must differ");
  }
};

namespace detail {

class CheckTimer {
 public:
  CheckTimer() : t0_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

inline CheckResult finish(const CheckTimer& t, std::string name,
                          std::map<std::string, std::string> params, std::string residual) {
  CheckResult r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.residual = std::move(residual);
  r.pass = r.residual.empty();
  r.wall_ms = t.ms();
  return r;
}

inline std::string diff_str(const QKClass& lhs, const QKClass& rhs) {
  QKClass d = lhs - rhs;
  return d.is_zero() ? std::string() : d.str();
}

inline std::string diff_str(const LambdaYPoly& lhs, const LambdaYPoly& rhs, int n, int D) {
  std::string res;
  std::size_t len = std::max(lhs.size(), rhs.size());
  for (std::size_t d = 0; d < len; ++d) {
    QKClass a = d < lhs.size() ? lhs[d] : QKClass(n, D);
    QKClass b = d < rhs.size() ? rhs[d] : QKClass(n, D);
    std::string piece = diff_str(a, b);
    if (!piece.empty()) {
      if (!res.empty()) res += " | ";
      res += "y^" + std::to_string(d) + ": " + piece;
    }
  }
  return res;
}

inline NovikovPoly one_minus_q(int j, int n, int D) {
  NovikovPoly p = NovikovPoly::one(n, D);
  if (j >= 1) p -= NovikovPoly::q(j, n, D);
  return p;
}

// Q_j * 1/(1-Q_j) as a truncated series; zero for j = 0.
inline NovikovPoly q_over_one_minus_q(int j, int n, int D) {
  if (j == 0) return NovikovPoly::zero(n, D);
  return NovikovPoly::q(j, n, D) * geometric_factor(j, n, D);
}

inline std::string set_str(const std::vector<int>& J) {
  if (J.empty()) return "0";
  std::string s;
  for (int j : J) s += std::to_string(j);
  return s;
}

inline std::vector<std::vector<int>> all_subsets(int lo, int hi) {
  std::vector<std::vector<int>> out{{}};
  for (int v = lo; v <= hi; ++v) {
    std::size_t sz = out.size();
    for (std::size_t i = 0; i < sz; ++i) {
      auto s = out[i];
      s.push_back(v);
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// operator form of wedge(k,d) - Q_{k-1} * wedge(k-2,d) style combinations
inline LineCombo scaled_wedge_combo(Engine& eng, int k, int d, bool dual,
                                    const NovikovPoly& scale) {
  LineCombo out = wedge_combo(eng, k, d, dual);
  for (LineTerm& t : out) t.scalar = t.scalar * scale;
  return out;
}

}  // namespace detail

// --------------------------------------------------------------------------
// Whitney relations

inline CheckResult check_whitney_rel1(VerifyContext& cx, int k, Mutation mut = Mutation::none) {
  detail::CheckTimer timer;
  Engine& E = cx.eng;
  int n = cx.n, D = cx.D;
  LambdaYPoly lhs = poly_mult(E, lambda_y_sub_combo(E, k - 1, false),
                              lambda_y_quotient(E, k, false));
  LambdaYPoly rhs = lambda_y_sub(E, k, false);
  rhs.resize(std::max<std::size_t>(rhs.size(), k + 1), QKClass(n, D));
  if (mut == Mutation::none && k >= 2) {
    NovikovPoly scale = detail::q_over_one_minus_q(k - 1, n, D);
    LambdaYPoly diff;
    LambdaYPoly a = lambda_y_sub(E, k - 1, false), b = lambda_y_sub(E, k - 2, false);
    for (std::size_t d = 0; d < a.size(); ++d) {
      QKClass c = a[d];
      if (d < b.size()) c -= b[d];
      diff.push_back(c);
    }
    Weight q_weight = eps_J(n, {k}, -1);
    for (std::size_t d = 0; d < diff.size(); ++d) {
      if (diff[d].is_zero()) continue;
      rhs[d + 1] -= E.quantum_line_mult(q_weight, diff[d]) * scale;
    }
  }
  return detail::finish(timer, "whitney1_k" + std::to_string(k),
                        {{"n", std::to_string(n)}, {"D", std::to_string(D)},
                         {"k", std::to_string(k)}},
                        detail::diff_str(lhs, rhs, n, D));
}

inline CheckResult check_whitney_rel2(VerifyContext& cx, int k, Mutation mut = Mutation::none) {
  detail::CheckTimer timer;
  Engine& E = cx.eng;
  int n = cx.n, D = cx.D;
  LambdaYPoly lhs = poly_mult(E, lambda_y_sub_combo(E, k - 1, true),
                              lambda_y_quotient(E, k, true));
  LambdaYPoly rhs = lambda_y_sub(E, k, true);
  rhs.resize(std::max<std::size_t>(rhs.size(), k + 1), QKClass(n, D));
  if (mut == Mutation::none && k >= 2) {
    NovikovPoly scale = detail::q_over_one_minus_q(k - 1, n, D);
    LambdaYPoly a = lambda_y_sub(E, k - 1, true), b = lambda_y_sub(E, k - 2, true);
    LambdaYPoly diff;
    for (std::size_t d = 0; d < a.size(); ++d) {
      QKClass c = a[d];
      if (d < b.size()) c -= b[d];
      diff.push_back(c);
    }
    Weight q_weight = eps_J(n, {k}, +1);
    for (std::size_t d = 0; d < diff.size(); ++d) {
      if (diff[d].is_zero()) continue;
      rhs[d + 1] -= E.quantum_line_mult(q_weight, diff[d]) * scale;
    }
  }
  return detail::finish(timer, "whitney2_k" + std::to_string(k),
                        {{"n", std::to_string(n)}, {"D", std::to_string(D)},
                         {"k", std::to_string(k)}},
                        detail::diff_str(lhs, rhs, n, D));
}

inline CheckResult check_whitney_rel3(VerifyContext& cx, Mutation mut = Mutation::none) {
  detail::CheckTimer timer;
  Engine& E = cx.eng;
  int n = cx.n, D = cx.D;
  LambdaYPoly lhs = poly_mult(E, lambda_y_sub_combo(E, n, false), lambda_y_sub(E, n, true));
  lhs.resize(2 * n + 1, QKClass(n, D));
  LambdaYPoly rhs = lambda_y_trivial(E);
  if (mut == Mutation::none) {
    for (int p = 1; p <= n; ++p) {
      NovikovPoly scale = geometric_factor(p - 1, n, D);
      for (int i = p; i <= n; ++i) scale = scale * NovikovPoly::q(i, n, D);
      if (scale.is_zero()) continue;
      // operator side: lambda_y(S_{p-1}) - Q_{p-1} lambda_y(S_{p-2})
      std::vector<LineCombo> fs;
      for (int d = 0; d <= std::max(p - 1, 0); ++d) {
        LineCombo c = wedge_combo(E, p - 1, d, false);
        if (p >= 2) {
          LineCombo extra = detail::scaled_wedge_combo(E, p - 2, d, false,
                                                       -NovikovPoly::q(p - 1, n, D));
          c.insert(c.end(), extra.begin(), extra.end());
        }
        fs.push_back(std::move(c));
      }
      // class side: lambda_y(S_{p-1}^vee) - Q_{p-1} lambda_y(S_{p-2}^vee)
      LambdaYPoly gs;
      for (int d = 0; d <= std::max(p - 1, 0); ++d) {
        QKClass c = wedge_class(E, p - 1, d, true);
        if (p >= 2) c -= wedge_class(E, p - 2, d, true) * NovikovPoly::q(p - 1, n, D);
        gs.push_back(std::move(c));
      }
      LambdaYPoly t = poly_mult(E, fs, gs);
      for (std::size_t d = 0; d < t.size() && d + 2 <= 2 * static_cast<std::size_t>(n); ++d)
        rhs[d + 2] -= t[d] * scale;
    }
  }
  return detail::finish(timer, "whitney3",
                        {{"n", std::to_string(n)}, {"D", std::to_string(D)}},
                        detail::diff_str(lhs, rhs, n, D));
}

// --------------------------------------------------------------------------
// Line-bundle identities

inline CheckResult check_quantum_inverse(VerifyContext& cx, int j, Mutation mut = Mutation::none) {
  detail::CheckTimer timer;
  Engine& E = cx.eng;
  int n = cx.n, D = cx.D;
  QKClass prod = E.quantum_line_mult(eps_J(n, {j}, -1),
                                     line_bundle_class(E, eps_J(n, {j}, +1)));
  NovikovPoly expect = detail::one_minus_q(j, n, D);
  if (mut == Mutation::none) expect = expect * detail::one_minus_q(j - 1, n, D);
  return detail::finish(timer, "quantum_inverse_j" + std::to_string(j),
                        {{"n", std::to_string(n)}, {"D", std::to_string(D)},
                         {"j", std::to_string(j)}},
                        detail::diff_str(prod, QKClass::unit(n, D) * expect));
}

inline CheckResult check_multiple_line(VerifyContext& cx, const std::vector<int>& J, int k,
                                       int sign) {
  detail::CheckTimer timer;
  Engine& E = cx.eng;
  int n = cx.n, D = cx.D;
  bool adjacent = false;
  for (int j : J) adjacent |= (j == k - 1);
  std::vector<int> Jk = J;
  Jk.push_back(k);
  QKClass lhs = line_bundle_class(E, eps_J(n, Jk, sign));
  if (adjacent) lhs = lhs * detail::one_minus_q(k - 1, n, D);
  QKClass rhs = E.quantum_line_mult(eps_J(n, J, sign),
                                    line_bundle_class(E, eps_J(n, {k}, sign)));
  std::string name = std::string("multiple_line_") + (sign < 0 ? "minus" : "plus") +
                     "_k" + std::to_string(k) + "_J" + detail::set_str(J);
  return detail::finish(timer, name,
                        {{"n", std::to_string(n)}, {"D", std::to_string(D)},
                         {"k", std::to_string(k)}, {"J", detail::set_str(J)},
                         {"sign", sign < 0 ? "-" : "+"}},
                        detail::diff_str(lhs, rhs));
}

// --------------------------------------------------------------------------
// Borel relation

namespace detail {

// phi factor of one barred-interval subset at one position, rank encoding
// 1..n unbarred then n+1..2n for bar n,...,bar 1.
inline NovikovPoly phi_factor(const std::vector<bool>& in, int r, int n, int D,
                              bool mutated) {
  if (mutated) return NovikovPoly::one(n, D);
  if (r <= n) {
    // factor 1/(1-Q_r) when position r and its successor both belong
    if (in[r] && r + 1 <= 2 * n && in[r + 1]) return geometric_factor(r, n, D);
    return NovikovPoly::one(n, D);
  }
  if (r == 2 * n) return NovikovPoly::one(n, D);  // bar 1
  int j = 2 * n + 1 - r;  // position is bar j, 2 <= j <= n
  bool has_jm1 = in[j - 1];
  bool has_bar_jm1 = in[r + 1];
  if (has_jm1 && has_bar_jm1) {
    bool gap_empty = true;
    for (int t = j; t <= r; ++t) gap_empty &= !in[t];
    if (gap_empty) {
      // 1 + Q_{j-1}...Q_n / (1-Q_{j-1})
      NovikovPoly tail = geometric_factor(j - 1, n, D);
      for (int i = j - 1; i <= n; ++i) tail = tail * NovikovPoly::q(i, n, D);
      return NovikovPoly::one(n, D) + tail;
    }
  }
  if (in[r] && has_bar_jm1) return geometric_factor(j - 1, n, D);
  return NovikovPoly::one(n, D);
}

}  // namespace detail

inline CheckResult check_borel(VerifyContext& cx, int d, Mutation mut = Mutation::none) {
  detail::CheckTimer timer;
  Engine& E = cx.eng;
  int n = cx.n, D = cx.D;
  QKClass sum(n, D);
  std::vector<int> members;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(members.size()) == d) {
      std::vector<bool> in(2 * n + 2, false);
      for (int r : members) in[r] = true;
      NovikovPoly factor = NovikovPoly::one(n, D);
      for (int r = 1; r <= 2 * n; ++r)
        factor = factor * detail::phi_factor(in, r, n, D, mut != Mutation::none);
      QKClass prod = QKClass::unit(n, D);
      for (auto it = members.rbegin(); it != members.rend(); ++it) {
        int r = *it;
        Weight wgt = r <= n ? eps_J(n, {r}, -1) : eps_J(n, {2 * n + 1 - r}, +1);
        prod = E.quantum_line_mult(wgt, prod);
      }
      sum += prod * factor;
      return;
    }
    if (next > 2 * n) return;
    if (2 * n - next + 1 < d - static_cast<int>(members.size())) return;
    members.push_back(next);
    rec(next + 1);
    members.pop_back();
    rec(next + 1);
  };
  rec(1);
  QKClass rhs = QKClass::unit(n, D) * elementary_symmetric_char(d, n);
  return detail::finish(timer, "borel_d" + std::to_string(d),
                        {{"n", std::to_string(n)}, {"D", std::to_string(D)},
                         {"d", std::to_string(d)}},
                        detail::diff_str(sum, rhs));
}

// --------------------------------------------------------------------------
// Intermediate product lemmas

namespace detail {

// sum over J, K subsets of [1,n] with max J = max K = p and |J| + |K| = d of
// [O(-eps_J)] * [O(eps_K)]
inline QKClass paired_product_sum(Engine& E, int d, int p) {
  int n = E.rank(), D = E.trunc_degree();
  QKClass out(n, D);
  auto subs = all_subsets(1, p - 1);
  for (const auto& J0 : subs) {
    for (const auto& K0 : subs) {
      if (static_cast<int>(J0.size() + K0.size()) + 2 != d) continue;
      std::vector<int> J = J0, K = K0;
      J.push_back(p);
      K.push_back(p);
      out += E.quantum_line_mult(eps_J(n, J, -1), line_bundle_class(E, eps_J(n, K, +1)));
    }
  }
  return out;
}

}  // namespace detail

inline CheckResult check_lemma_products(VerifyContext& cx, int d, int p) {
  detail::CheckTimer timer;
  Engine& E = cx.eng;
  int n = cx.n, D = cx.D;

  // first identity, at this d: convolution of wedge classes of S_n
  QKClass lhs1(n, D);
  for (int k = 0; k <= d; ++k) {
    QKClass g = wedge_class(E, n, d - k, true);
    if (g.is_zero()) continue;
    lhs1 += mult(E, wedge_combo(E, n, k, false), g);
  }
  QKClass rhs1 = QKClass::unit(n, D) *
                 (d <= 2 * n ? elementary_symmetric_char(d, n) : CharElem());
  for (int q = 1; q <= n; ++q) {
    NovikovPoly scale = geometric_factor(q, n, D);
    for (int i = q; i <= n; ++i) scale = scale * NovikovPoly::q(i, n, D);
    rhs1 -= detail::paired_product_sum(E, d, q) * scale;
  }
  std::string res = detail::diff_str(lhs1, rhs1);
  if (!res.empty()) res = "sum-identity: " + res;

  // second identity at (d, p)
  QKClass lhs2 = detail::paired_product_sum(E, d, p);
  QKClass rhs2(n, D);
  NovikovPoly scale2 = detail::one_minus_q(p, n, D) * geometric_factor(p - 1, n, D);
  NovikovPoly qpm1 = p >= 2 ? NovikovPoly::q(p - 1, n, D) : NovikovPoly::zero(n, D);
  for (int k = 0; k + 2 <= d; ++k) {
    int l = d - 2 - k;
    LineCombo f = wedge_combo(E, p - 1, k, false);
    if (p >= 2) {
      LineCombo extra = detail::scaled_wedge_combo(E, p - 2, k, false, -qpm1);
      f.insert(f.end(), extra.begin(), extra.end());
    }
    QKClass g = wedge_class(E, p - 1, l, true);
    if (p >= 2) g -= wedge_class(E, p - 2, l, true) * qpm1;
    if (f.empty() || g.is_zero()) continue;
    rhs2 += mult(E, f, g);
  }
  rhs2 = rhs2 * scale2;
  std::string res2 = detail::diff_str(lhs2, rhs2);
  if (!res2.empty()) {
    if (!res.empty()) res += " | ";
    res += "max-split: " + res2;
  }
  return detail::finish(timer, "lemma_products_d" + std::to_string(d) + "_p" + std::to_string(p),
                        {{"n", std::to_string(n)}, {"D", std::to_string(D)},
                         {"d", std::to_string(d)}, {"p", std::to_string(p)}},
                        res);
}

// --------------------------------------------------------------------------
// Presentation ideal generators

inline CheckResult check_presentation(VerifyContext& cx, Mutation mut = Mutation::none) {
  detail::CheckTimer timer;
  Engine& E = cx.eng;
  int n = cx.n, D = cx.D;
  std::string res;
  auto record = [&](const std::string& gen, const QKClass& value) {
    if (value.is_zero()) return;
    if (!res.empty()) res += " | ";
    res += gen + ": " + value.str();
  };

  for (int k = 1; k <= n; ++k) {
    NovikovPoly geom = mut == Mutation::none ? geometric_factor(k - 1, n, D)
                                             : NovikovPoly::one(n, D);
    NovikovPoly qk1 = k >= 2 ? NovikovPoly::q(k - 1, n, D) : NovikovPoly::zero(n, D);
    for (int d = 1; d <= k; ++d) {
      for (int dual = 0; dual <= 1; ++dual) {
        QKClass inner = wedge_class(E, k - 1, d - 1, dual != 0);
        if (k >= 2) inner -= wedge_class(E, k - 2, d - 1, dual != 0) * qk1;
        QKClass gen = wedge_class(E, k, d, dual != 0) - wedge_class(E, k - 1, d, dual != 0) -
                      E.quantum_line_mult(eps_J(n, {k}, dual ? +1 : -1), inner) * geom;
        record((dual ? "G" : "F") + std::string("_d") + std::to_string(d) + "_k" +
                   std::to_string(k),
               gen);
      }
    }
  }

  for (int d = 1; d <= n; ++d) {
    QKClass gen(n, D);
    for (int k = 0; k <= d; ++k) {
      QKClass g = wedge_class(E, n, d - k, true);
      if (g.is_zero()) continue;
      gen += mult(E, wedge_combo(E, n, k, false), g);
    }
    gen -= QKClass::unit(n, D) * elementary_symmetric_char(d, n);
    for (int p = 1; p <= n; ++p) {
      NovikovPoly scale = geometric_factor(p - 1, n, D);
      for (int i = p; i <= n; ++i) scale = scale * NovikovPoly::q(i, n, D);
      NovikovPoly qpm1 = p >= 2 ? NovikovPoly::q(p - 1, n, D) : NovikovPoly::zero(n, D);
      QKClass inner(n, D);
      for (int r = 0; r + 2 <= d; ++r) {
        LineCombo f = wedge_combo(E, p - 1, r, false);
        if (p >= 2) {
          LineCombo extra = detail::scaled_wedge_combo(E, p - 2, r, false, -qpm1);
          f.insert(f.end(), extra.begin(), extra.end());
        }
        QKClass g = wedge_class(E, p - 1, d - 2 - r, true);
        if (p >= 2) g -= wedge_class(E, p - 2, d - 2 - r, true) * qpm1;
        if (f.empty() || g.is_zero()) continue;
        inner += mult(E, f, g);
      }
      gen += inner * scale;
    }
    record("FG_d" + std::to_string(d), gen);
  }

  record("F11_x1", wedge_class(E, 1, 1, false) - line_bundle_class(E, eps_J(n, {1}, -1)));
  record("G11_y1", wedge_class(E, 1, 1, true) - line_bundle_class(E, eps_J(n, {1}, +1)));

  for (int j = 1; j <= n; ++j) {
    QKClass prod = E.quantum_line_mult(eps_J(n, {j}, -1),
                                       line_bundle_class(E, eps_J(n, {j}, +1)));
    NovikovPoly expect = detail::one_minus_q(j, n, D) * detail::one_minus_q(j - 1, n, D);
    record("xy_j" + std::to_string(j), prod - QKClass::unit(n, D) * expect);
  }

  return detail::finish(timer, "presentation",
                        {{"n", std::to_string(n)}, {"D", std::to_string(D)}}, res);
}

// --------------------------------------------------------------------------
// Classical limit

namespace detail {

// d-th elementary symmetric polynomial of given Laurent monomial weights,
// by direct subset enumeration; the independent route against the iterative
// builder used by the ring.
inline CharElem elementary_by_subsets(int n, const std::vector<Weight>& vars, int d) {
  CharElem out;
  int m = static_cast<int>(vars.size());
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(idx.size()) == d) {
      Weight e(n);
      for (int i : idx) e = e + vars[i];
      out += CharElem::monomial(e);
      return;
    }
    if (next >= m) return;
    idx.push_back(next);
    rec(next + 1);
    idx.pop_back();
    rec(next + 1);
  };
  rec(0);
  return out;
}

}  // namespace detail

inline CheckResult check_classical_limit(VerifyContext& cx) {
  detail::CheckTimer timer;
  int n = cx.n;
  Engine E0(n, 0, cx.seed);
  std::string res;
  auto record = [&](const std::string& what, const QKClass& value) {
    if (value.is_zero()) return;
    if (!res.empty()) res += " | ";
    res += what + ": " + value.str();
  };

  auto cl_line = [&](const Weight& lam) {
    return E0.classical_line_mult(lam, QKClass::unit(n, 0));
  };
  auto cl_wedge = [&](int k, int d, bool dual) {
    if (d == 0) return QKClass::unit(n, 0);
    QKClass out(n, 0);
    if (k < 1 || d > k) return out;
    detail::subsets_of_prefix(k, d, [&](const std::vector<int>& J) {
      out += cl_line(eps_J(n, J, dual ? 1 : -1));
    });
    return out;
  };
  auto cl_wedge_mult = [&](int k, int d, bool dual, const QKClass& z) {
    if (d == 0) return z;
    QKClass out(n, 0);
    if (k < 1 || d > k) return out;
    detail::subsets_of_prefix(k, d, [&](const std::vector<int>& J) {
      out += E0.classical_line_mult(eps_J(n, J, dual ? 1 : -1), z);
    });
    return out;
  };

  // whitney identities at Q = 0
  for (int k = 1; k <= n; ++k) {
    for (int dual = 0; dual <= 1; ++dual) {
      QKClass quot = cl_line(eps_J(n, {k}, dual ? 1 : -1));
      for (int d = 0; d <= k; ++d) {
        QKClass lhs = cl_wedge_mult(k - 1, d, dual != 0, QKClass::unit(n, 0));
        if (d >= 1) lhs += cl_wedge_mult(k - 1, d - 1, dual != 0, quot);
        record("classical_whitney" + std::to_string(dual + 1) + "_k" + std::to_string(k) +
                   "_y" + std::to_string(d),
               lhs - cl_wedge(k, d, dual != 0));
      }
    }
  }
  for (int d = 0; d <= 2 * n; ++d) {
    QKClass lhs(n, 0);
    for (int k = 0; k <= d; ++k) {
      QKClass g = cl_wedge(n, d - k, true);
      if (g.is_zero()) continue;
      lhs += cl_wedge_mult(n, k, false, g);
    }
    record("classical_whitney3_y" + std::to_string(d),
           lhs - QKClass::unit(n, 0) * elementary_symmetric_char(d, n));
  }

  // symbolic identities of elementary symmetric polynomials, in commuting
  // formal variables x_i = e^{eps_i}
  auto note = [&](const std::string& what, const CharElem& value) {
    if (value.is_zero()) return;
    if (!res.empty()) res += " | ";
    res += what + ": " + value.str();
  };
  std::vector<Weight> xs, xs_inv, both;
  for (int i = 1; i <= n; ++i) xs.push_back(eps_J(n, {i}, +1));
  for (int i = 1; i <= n; ++i) xs_inv.push_back(eps_J(n, {i}, -1));
  both = xs;
  for (int i = n; i >= 1; --i) both.push_back(eps_J(n, {i}, -1));
  for (int k = 1; k <= n; ++k) {
    std::vector<Weight> pre(xs.begin(), xs.begin() + k);
    std::vector<Weight> pre1(xs.begin(), xs.begin() + (k - 1));
    for (int d = 1; d <= k; ++d) {
      CharElem lhs = detail::elementary_by_subsets(n, pre, d);
      CharElem rhs = detail::elementary_by_subsets(n, pre1, d) +
                     detail::elementary_by_subsets(n, pre1, d - 1) *
                         CharElem::monomial(xs[k - 1]);
      note("e_recursion_k" + std::to_string(k) + "_d" + std::to_string(d), lhs - rhs);
    }
  }
  for (int d = 0; d <= 2 * n; ++d) {
    CharElem conv;
    for (int k = 0; k <= d; ++k)
      conv += detail::elementary_by_subsets(n, xs, k) *
              detail::elementary_by_subsets(n, xs_inv, d - k);
    note("e_convolution_d" + std::to_string(d),
         conv - detail::elementary_by_subsets(n, both, d));
    note("e_builder_d" + std::to_string(d),
         elementary_symmetric_char(d, n) - detail::elementary_by_subsets(n, both, d));
  }

  return detail::finish(timer, "classical_limit", {{"n", std::to_string(n)}}, res);
}

// --------------------------------------------------------------------------
// Combinatorial model checks

inline CheckResult check_qam_am(VerifyContext& cx, const std::vector<int>& J, int sign) {
  detail::CheckTimer timer;
  int n = cx.n;
  Weight lam = eps_J(n, J, sign);
  SignedPerm e = SignedPerm::identity(n);
  std::string res;
  for (Engine* eng : {&cx.eng, &cx.eng2}) {
    for (const AdmissibleRecord& rec : admissible_subsets(e, eng->chain(lam))) {
      if (!rec.down.is_zero()) {
        res = "seed " + std::to_string(eng->seed()) + ": record ending at " + rec.end.str() +
              " has nonzero down";
        break;
      }
    }
    if (!res.empty()) break;
  }
  std::string name = std::string("qam_am_") + (sign < 0 ? "minus" : "plus") + "_J" +
                     detail::set_str(J);
  return detail::finish(timer, name,
                        {{"n", std::to_string(n)}, {"J", detail::set_str(J)},
                         {"sign", sign < 0 ? "-" : "+"}},
                        res);
}

inline CheckResult check_chain_independence(VerifyContext& cx, const std::vector<int>& J,
                                            int sign) {
  detail::CheckTimer timer;
  int n = cx.n;
  Weight lam = eps_J(n, J, sign);
  std::string res;
  for (const SignedPerm& w : all_elements(n)) {
    QKClass diff = cx.eng.quantum_row(lam, w) - cx.eng2.quantum_row(lam, w);
    if (!diff.is_zero()) {
      res = "rows differ at w = " + w.str() + ": " + diff.str();
      break;
    }
  }
  std::string name = std::string("chain_indep_") + (sign < 0 ? "minus" : "plus") + "_J" +
                     detail::set_str(J);
  return detail::finish(timer, name,
                        {{"n", std::to_string(n)}, {"D", std::to_string(cx.D)},
                         {"J", detail::set_str(J)}, {"sign", sign < 0 ? "-" : "+"}},
                        res);
}

inline CheckResult check_edge_equivalence(VerifyContext& cx) {
  detail::CheckTimer timer;
  int n = cx.n;
  std::string res;
  const auto roots = positive_roots(n);
  for (const SignedPerm& w : all_elements(n)) {
    for (const Root& a : roots) {
      EdgeKind k1 = edge_type_by_length(w, a);
      EdgeKind k2 = edge_type_by_pattern(w, a);
      if (k1 != k2) {
        res = "criteria disagree at w = " + w.str() + ", alpha = " + a.str() + ": " +
              edge_kind_name(k1) + " vs " + edge_kind_name(k2);
        break;
      }
    }
    if (!res.empty()) break;
  }
  return detail::finish(timer, "edge_equiv", {{"n", std::to_string(n)}}, res);
}

// --------------------------------------------------------------------------
// Rank-1 localization oracle

namespace detail {

// exact division of Laurent polynomials whose divisor has unit leading
// coefficient under the lex order; throws if the division is not exact.
// Exactness is detected through the quotient bound: in an exact division
// every quotient exponent satisfies e >= min(a) - min(b) lexicographically,
// because the minimal monomial of a product is the sum of the minimal
// monomials.
inline CharElem divide_exact(CharElem a, const CharElem& b) {
  if (b.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (a.is_zero()) return a;
  auto lead = *b.terms().rbegin();
  if (!(lead.second == BigInt(1) || lead.second == BigInt(-1)))
    throw std::invalid_argument("divide_exact: divisor leading coefficient not a unit");
  ExpVec low_bound = a.terms().begin()->first;
  const ExpVec& low_b = b.terms().begin()->first;
  for (std::size_t i = 0; i < low_bound.size(); ++i) low_bound[i] -= low_b[i];
  CharElem q;
  int guard = 0;
  while (!a.is_zero()) {
    if (++guard > 1000000) throw std::runtime_error("divide_exact: not exact");
    auto top = *a.terms().rbegin();
    ExpVec e = top.first;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= lead.first[i];
    if (e < low_bound) throw std::runtime_error("divide_exact: not exact");
    BigInt c = lead.second == BigInt(1) ? top.second : -top.second;
    CharElem mono = CharElem::monomial(Weight(e), c);
    q += mono;
    a -= mono * b;
  }
  return q;
}

struct Rank1Localized {
  CharElem at_e, at_s;
};

// restriction of c_e [O^e] + c_s [O^{s_1}] to the two torus-fixed points of
// the rank-1 flag manifold; the skyscraper restricts to 1 - e^{-2 eps_1}
inline Rank1Localized rank1_restrict(const CharElem& c_e, const CharElem& c_s) {
  CharElem sky = CharElem::unit(1) - CharElem::monomial(Weight(std::vector<int>{-2}));
  return {c_e, c_e + c_s * sky};
}

// line-bundle multiplication by O(m eps_1) computed purely through
// fixed-point restrictions, then solved back to the Schubert basis
inline std::pair<CharElem, CharElem> rank1_oracle_line_mult(int m, const CharElem& c_e,
                                                            const CharElem& c_s) {
  Rank1Localized r = rank1_restrict(c_e, c_s);
  // [O(lambda)] restricts to e^{-w lambda} at the fixed point w
  r.at_e = r.at_e * CharElem::monomial(Weight(std::vector<int>{-m}));
  r.at_s = r.at_s * CharElem::monomial(Weight(std::vector<int>{m}));
  CharElem sky = CharElem::unit(1) - CharElem::monomial(Weight(std::vector<int>{-2}));
  CharElem new_e = r.at_e;
  CharElem new_s = divide_exact(r.at_s - r.at_e, sky);
  return {new_e, new_s};
}

}  // namespace detail

inline CheckResult check_rank1_oracle(VerifyContext& cx) {
  detail::CheckTimer timer;
  Engine E(1, cx.D, cx.seed);
  std::string res;
  for (int m : {+1, -1}) {
    QKClass cls = line_bundle_class(E, Weight(std::vector<int>{m}));
    auto [oe, os] = detail::rank1_oracle_line_mult(m, CharElem::unit(1), CharElem());
    QKClass expect(1, cx.D);
    expect.add_term(SignedPerm::identity(1), NovikovPoly::scalar(oe, 1, cx.D));
    expect.add_term(SignedPerm(std::vector<int>{-1}), NovikovPoly::scalar(os, 1, cx.D));
    QKClass diff = cls - expect;
    if (!diff.is_zero()) {
      if (!res.empty()) res += " | ";
      res += std::string("O(") + (m > 0 ? "+" : "-") + "e1): " + diff.str();
    }
  }
  return detail::finish(timer, "rank1_oracle", {{"D", std::to_string(cx.D)}}, res);
}

// --------------------------------------------------------------------------
// Q = 0 degeneration

inline CheckResult check_q0_degeneration(VerifyContext& cx) {
  detail::CheckTimer timer;
  int n = cx.n;
  Engine E0(n, 0, cx.seed);
  std::string res;
  for (int sign : {+1, -1}) {
    for (const auto& J : detail::all_subsets(1, n)) {
      Weight lam = eps_J(n, J, sign);
      for (const SignedPerm& w : all_elements(n)) {
        const QKClass& qrow = E0.quantum_row(lam, w);
        QKClass crow(n, 0);
        for (const auto& [v, c] : E0.classical_row(lam, w))
          crow.add_term(v, NovikovPoly::scalar(c, n, 0));
        QKClass diff = qrow - crow;
        if (!diff.is_zero()) {
          res = "lambda = " + std::string(sign < 0 ? "-" : "+") + "eps_" +
                detail::set_str(J) + ", w = " + w.str() + ": " + diff.str();
          break;
        }
      }
      if (!res.empty()) break;
    }
    if (!res.empty()) break;
  }
  return detail::finish(timer, "q0_degeneration", {{"n", std::to_string(n)}}, res);
}

}  // namespace qkc
