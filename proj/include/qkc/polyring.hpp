// Exact coefficient rings: the torus representation ring as integer Laurent
// polynomials in e^{eps_1},...,e^{eps_n}, Novikov polynomials truncated by
// total Q-degree, and Schubert-basis class containers over them.
//
// All maps are ordered, so iteration order and the canonical text rendering
// are deterministic. Zero coefficients are never stored.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qkc/bigint.hpp"
#include "qkc/rootsys.hpp"

namespace qkc {

using ExpVec = std::vector<int>;

// Element of Z[e^{+-eps_1},...,e^{+-eps_n}].
class CharElem {
 public:
  CharElem() = default;

  static CharElem monomial(const Weight& mu, BigInt coeff = 1) {
    CharElem c;
    if (!coeff.is_zero()) c.terms_[mu.coords()] = std::move(coeff);
    return c;
  }

  static CharElem unit(int n) { return monomial(Weight(n)); }

  const std::map<ExpVec, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  CharElem operator+(const CharElem& o) const {
    CharElem r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  CharElem operator-(const CharElem& o) const {
    CharElem r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }
  CharElem operator-() const {
    CharElem r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }
  CharElem operator*(const CharElem& o) const {
    CharElem r;
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        ExpVec e = e1;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  CharElem operator*(const BigInt& s) const {
    CharElem r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
    return r;
  }
  CharElem& operator+=(const CharElem& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  CharElem& operator-=(const CharElem& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  // exponent-negation, e^{mu} -> e^{-mu}
  CharElem conj() const {
    CharElem r;
    for (const auto& [e, c] : terms_) {
      ExpVec m = e;
      for (int& v : m) v = -v;
      r.terms_[m] = c;
    }
    return r;
  }

  bool operator==(const CharElem& o) const { return terms_ == o.terms_; }
  bool operator!=(const CharElem& o) const { return terms_ != o.terms_; }

  void add_term(const ExpVec& e, const BigInt& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bool neg = c.sign() < 0;
      BigInt mag = neg ? -c : c;
      if (first) {
        if (neg) s += "-";
        first = false;
      } else {
        s += neg ? " - " : " + ";
      }
      bool zero_exp = true;
      for (int v : e)
        if (v != 0) zero_exp = false;
      std::string magstr = mag.to_string();
      if (zero_exp) {
        s += magstr;
      } else {
        if (magstr != "1") s += magstr + "*";
        s += "e^(";
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(e[i]);
        }
        s += ")";
      }
    }
    return s;
  }

 private:
  std::map<ExpVec, BigInt> terms_;
};

// d-th elementary symmetric polynomial in e^{eps_1},...,e^{eps_n},
// e^{-eps_n},...,e^{-eps_1}; the class of the d-th wedge of the trivial
// rank-2n bundle.
inline CharElem elementary_symmetric_char(int d, int n) {
  if (d < 0 || d > 2 * n)
    throw std::invalid_argument("elementary_symmetric_char: degree out of range");
  std::vector<Weight> chars;
  for (int i = 1; i <= n; ++i) chars.push_back(eps_J(n, {i}, 1));
  for (int i = n; i >= 1; --i) chars.push_back(eps_J(n, {i}, -1));
  // e[k] after processing a prefix of variables
  std::vector<CharElem> e(d + 1);
  e[0] = CharElem::unit(n);
  for (const Weight& x : chars) {
    CharElem xm = CharElem::monomial(x);
    for (int k = d; k >= 1; --k) e[k] = e[k] + e[k - 1] * xm;
  }
  return e[d];
}

// Polynomial in Q_1..Q_n with CharElem coefficients, truncated by total
// degree; terms above the truncation degree are dropped on the spot.
class NovikovPoly {
 public:
  NovikovPoly(int n, int trunc_degree) : n_(n), D_(trunc_degree) {
    if (trunc_degree < 0) throw std::invalid_argument("NovikovPoly: negative truncation");
  }

  static NovikovPoly zero(int n, int D) { return NovikovPoly(n, D); }
  static NovikovPoly one(int n, int D) { return scalar(CharElem::unit(n), n, D); }

  static NovikovPoly scalar(const CharElem& c, int n, int D) {
    NovikovPoly p(n, D);
    p.add_term(ExpVec(n, 0), c);
    return p;
  }

  // Q_j, or 1 for j = 0 times nothing: j must be in [1, n]
  static NovikovPoly q(int j, int n, int D) {
    if (j < 1 || j > n) throw std::invalid_argument("NovikovPoly::q: index out of range");
    NovikovPoly p(n, D);
    ExpVec e(n, 0);
    e[j - 1] = 1;
    p.add_term(e, CharElem::unit(n));
    return p;
  }

  int rank() const { return n_; }
  int trunc_degree() const { return D_; }
  const std::map<ExpVec, CharElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  NovikovPoly operator+(const NovikovPoly& o) const {
    check_compatible(o);
    NovikovPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  NovikovPoly operator-(const NovikovPoly& o) const {
    check_compatible(o);
    NovikovPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }
  NovikovPoly operator-() const {
    NovikovPoly r(n_, D_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }
  NovikovPoly operator*(const NovikovPoly& o) const {
    check_compatible(o);
    NovikovPoly r(n_, D_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        ExpVec e = e1;
        int deg = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
          e[i] += e2[i];
          deg += e[i];
        }
        if (deg > D_) continue;
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  NovikovPoly operator*(const CharElem& s) const {
    NovikovPoly r(n_, D_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }
  NovikovPoly& operator+=(const NovikovPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  NovikovPoly& operator-=(const NovikovPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  bool operator==(const NovikovPoly& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
  }
  bool operator!=(const NovikovPoly& o) const { return !(*this == o); }

  NovikovPoly truncate_to(int D) const {
    if (D > D_) throw std::invalid_argument("truncate_to: cannot raise truncation degree");
    NovikovPoly r(n_, D);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
  }

  void add_term(const ExpVec& e, const CharElem& c) {
    if (c.is_zero()) return;
    int deg = 0;
    for (int v : e) {
      if (v < 0) throw std::invalid_argument("NovikovPoly: negative Q-exponent");
      deg += v;
    }
    if (deg > D_) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += "(" + c.str() + ")";
      bool zero_exp = true;
      for (int v : e)
        if (v != 0) zero_exp = false;
      if (!zero_exp) {
        s += "*Q^(";
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(e[i]);
        }
        s += ")";
      }
    }
    return s;
  }

 private:
  int n_, D_;
  std::map<ExpVec, CharElem> terms_;

  void check_compatible(const NovikovPoly& o) const {
    if (n_ != o.n_ || D_ != o.D_)
      throw std::invalid_argument("NovikovPoly: mismatched rank or truncation degree");
  }
};

// Truncated series for 1/(1-Q_j): sum_{m<=D} Q_j^m. The index j = 0 stands
// for the constant 1, matching the convention Q_0 = 0.
inline NovikovPoly geometric_factor(int j, int n, int D) {
  if (j < 0 || j > n) throw std::invalid_argument("geometric_factor: index out of range");
  NovikovPoly p = NovikovPoly::one(n, D);
  if (j == 0) return p;
  for (int m = 1; m <= D; ++m) {
    ExpVec e(n, 0);
    e[j - 1] = m;
    p.add_term(e, CharElem::unit(n));
  }
  return p;
}

// Q^xi for xi in the positive coroot cone: with xi = sum c_i eps^vee_i the
// simple-coroot coordinates are d_i = c_1 + ... + c_i and Q^xi = prod Q_i^{d_i}.
inline NovikovPoly q_monomial_of_coroot(const Coroot& xi, int D) {
  int n = xi.rank();
  ExpVec d(n, 0);
  int acc = 0, total = 0;
  for (int i = 0; i < n; ++i) {
    acc += xi[i];
    if (acc < 0) throw std::invalid_argument("q_monomial_of_coroot: not in Q^{vee,+}");
    d[i] = acc;
    total += acc;
  }
  NovikovPoly p(n, D);
  if (total <= D) p.add_term(d, CharElem::unit(n));
  return p;
}

// Finite Schubert-basis expansion sum_w c_w(Q, e) [O^w].
class QKClass {
 public:
  QKClass(int n, int trunc_degree) : n_(n), D_(trunc_degree) {}

  static QKClass unit(int n, int D) {
    QKClass z(n, D);
    z.add_term(SignedPerm::identity(n), NovikovPoly::one(n, D));
    return z;
  }

  int rank() const { return n_; }
  int trunc_degree() const { return D_; }
  const std::map<SignedPerm, NovikovPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  NovikovPoly coefficient(const SignedPerm& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? NovikovPoly::zero(n_, D_) : it->second;
  }

  void add_term(const SignedPerm& w, const NovikovPoly& p) {
    if (p.is_zero()) return;
    auto it = coeffs_.find(w);
    if (it == coeffs_.end()) {
      if (p.trunc_degree() != D_ || p.rank() != n_)
        throw std::invalid_argument("QKClass: mismatched coefficient");
      coeffs_.emplace(w, p);
    } else {
      it->second += p;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  QKClass operator+(const QKClass& o) const {
    check_compatible(o);
    QKClass r = *this;
    for (const auto& [w, p] : o.coeffs_) r.add_term(w, p);
    return r;
  }
  QKClass operator-(const QKClass& o) const {
    check_compatible(o);
    QKClass r = *this;
    for (const auto& [w, p] : o.coeffs_) r.add_term(w, -p);
    return r;
  }
  QKClass operator-() const {
    QKClass r(n_, D_);
    for (const auto& [w, p] : coeffs_) r.coeffs_.emplace(w, -p);
    return r;
  }
  QKClass operator*(const NovikovPoly& s) const {
    QKClass r(n_, D_);
    for (const auto& [w, p] : coeffs_) r.add_term(w, p * s);
    return r;
  }
  QKClass operator*(const CharElem& s) const {
    QKClass r(n_, D_);
    for (const auto& [w, p] : coeffs_) r.add_term(w, p * s);
    return r;
  }
  QKClass& operator+=(const QKClass& o) {
    check_compatible(o);
    for (const auto& [w, p] : o.coeffs_) add_term(w, p);
    return *this;
  }
  QKClass& operator-=(const QKClass& o) {
    check_compatible(o);
    for (const auto& [w, p] : o.coeffs_) add_term(w, -p);
    return *this;
  }

  QKClass truncate_to(int D) const {
    QKClass r(n_, D);
    for (const auto& [w, p] : coeffs_) r.add_term(w, p.truncate_to(D));
    return r;
  }

  bool operator==(const QKClass& o) const {
    check_compatible(o);
    return coeffs_ == o.coeffs_;
  }
  bool operator!=(const QKClass& o) const { return !(*this == o); }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, p] : coeffs_) {
      if (!first) s += "; ";
      first = false;
      s += "[O^" + w.str() + "]: " + p.str();
    }
    return s;
  }

 private:
  int n_, D_;
  std::map<SignedPerm, NovikovPoly> coeffs_;

  void check_compatible(const QKClass& o) const {
    if (n_ != o.n_ || D_ != o.D_)
      throw std::invalid_argument("QKClass: mismatched rank or truncation degree");
  }
};

inline bool qk_equal(const QKClass& a, const QKClass& b) { return a == b; }

}  // namespace qkc
