// Admissible subsets of lambda-chains and the Chevalley multiplication
// operators built from them.
//
// An admissible subset of chain positions traces a directed path in the
// quantum Bruhat graph starting at w; its statistics are the endpoint, the
// count of negative labels, the affine-reflected weight
//   wt(A) = -w h_{i_1} ... h_{i_t}(-lambda),
// and the sum of coroots of quantum-edge labels. The quantum line operator
//   [O(lambda)] * [O^w] = sum_A (-1)^{n(A)} e^{-wt(A)} Q^{down(A)} [O^{ed(A)}]
// is valid for lambda = +-eps_J; the classical operator keeps only down = 0
// subsets, drops Q, and is valid for every weight. A raw semi-infinite
// expansion with explicit translation-shift factors is kept alongside to
// audit the cancellation that produces the quantum operator.

#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qkc/alcove.hpp"
#include "qkc/polyring.hpp"
#include "qkc/qbg.hpp"
#include "qkc/rootsys.hpp"

namespace qkc {

struct AdmissibleRecord {
  SignedPerm end;
  int neg_count = 0;
  Weight wt;
  Coroot down;
};

// DFS over chain positions, skip before take; output order is the DFS order.
inline std::vector<AdmissibleRecord> admissible_subsets(const SignedPerm& w,
                                                        const LambdaChain& chain) {
  int n = w.rank();
  std::vector<AdmissibleRecord> out;
  std::vector<int> taken;  // 0-based positions
  int r = static_cast<int>(chain.steps.size());

  std::function<void(int, const SignedPerm&, int, const Coroot&)> dfs =
      [&](int pos, const SignedPerm& cur, int neg, const Coroot& down) {
        if (pos == r) {
          Weight v = -chain.lambda;
          for (std::size_t k = taken.size(); k-- > 0;)
            v = affine_reflect(chain.steps[taken[k]], v);
          out.push_back(AdmissibleRecord{cur, neg, -w.apply(v), down});
          return;
        }
        dfs(pos + 1, cur, neg, down);
        const ChainStep& step = chain.steps[pos];
        Root a = step.gamma.abs();
        EdgeKind kind = edge_type_by_pattern(cur, a);
        if (kind == EdgeKind::None) return;
        taken.push_back(pos);
        Coroot d2 = kind == EdgeKind::Quantum ? down + a.coroot(n) : down;
        dfs(pos + 1, cur.reflect(a), neg + (step.gamma.is_positive() ? 0 : 1), d2);
        taken.pop_back();
      };
  dfs(0, w, 0, Coroot(n));
  return out;
}

namespace detail {

// lambda = sign * eps_J with sign in {+1,-1}; throws otherwise.
inline std::pair<int, std::vector<int>> split_eps_J(const Weight& lambda) {
  int sign = 0;
  std::vector<int> J;
  for (int i = 0; i < lambda.rank(); ++i) {
    int v = lambda[i];
    if (v == 0) continue;
    if (v != 1 && v != -1) throw std::invalid_argument("unsupported weight class");
    if (sign == 0) sign = v;
    if (v != sign) throw std::invalid_argument("unsupported weight class");
    J.push_back(i + 1);
  }
  return {sign == 0 ? 1 : sign, J};
}

}  // namespace detail

class Engine {
 public:
  Engine(int n, int trunc_degree, int seed = 0) : n_(n), D_(trunc_degree), seed_(seed) {
    if (n < 1) throw std::invalid_argument("Engine: rank must be >= 1");
    if (trunc_degree < 0) throw std::invalid_argument("Engine: negative truncation degree");
  }

  int rank() const { return n_; }
  int trunc_degree() const { return D_; }
  int seed() const { return seed_; }

  const LambdaChain& chain(const Weight& lambda) {
    auto it = chains_.find(lambda);
    if (it == chains_.end()) it = chains_.emplace(lambda, reduced_chain(lambda, seed_)).first;
    return it->second;
  }

  // [O(lambda)] * [O^w] for lambda = +-eps_J
  const QKClass& quantum_row(const Weight& lambda, const SignedPerm& w) {
    detail::split_eps_J(lambda);  // validate
    auto key = std::make_pair(lambda, w);
    auto it = qrows_.find(key);
    if (it != qrows_.end()) return it->second;
    QKClass row(n_, D_);
    for (const AdmissibleRecord& rec : admissible_subsets(w, chain(lambda))) {
      NovikovPoly q = q_monomial_of_coroot(rec.down, D_);
      if (q.is_zero()) continue;
      BigInt sign = rec.neg_count % 2 == 0 ? 1 : -1;
      row.add_term(rec.end, q * CharElem::monomial(-rec.wt, sign));
    }
    return qrows_.emplace(key, std::move(row)).first->second;
  }

  QKClass quantum_line_mult(const Weight& lambda, const QKClass& z) {
    if (z.rank() != n_ || z.trunc_degree() != D_)
      throw std::invalid_argument("quantum_line_mult: mismatched class");
    QKClass out(n_, D_);
    for (const auto& [w, coeff] : z.coeffs()) {
      const QKClass& row = quantum_row(lambda, w);
      for (const auto& [v, p] : row.coeffs()) out.add_term(v, p * coeff);
    }
    return out;
  }

  // [O(lambda)] . [O^w] in the classical ring, any lambda
  const std::map<SignedPerm, CharElem>& classical_row(const Weight& lambda,
                                                      const SignedPerm& w) {
    auto key = std::make_pair(lambda, w);
    auto it = crows_.find(key);
    if (it != crows_.end()) return it->second;
    std::map<SignedPerm, CharElem> row;
    for (const AdmissibleRecord& rec : admissible_subsets(w, chain(lambda))) {
      if (!rec.down.is_zero()) continue;
      BigInt sign = rec.neg_count % 2 == 0 ? 1 : -1;
      auto [pos, inserted] = row.emplace(rec.end, CharElem());
      pos->second += CharElem::monomial(-rec.wt, sign);
      if (pos->second.is_zero()) row.erase(pos);
    }
    return crows_.emplace(key, std::move(row)).first->second;
  }

  // extends the classical operator coefficient-wise over Novikov terms
  QKClass classical_line_mult(const Weight& lambda, const QKClass& z) {
    if (z.rank() != n_ || z.trunc_degree() != D_)
      throw std::invalid_argument("classical_line_mult: mismatched class");
    QKClass out(n_, D_);
    for (const auto& [w, coeff] : z.coeffs()) {
      for (const auto& [v, c] : classical_row(lambda, w)) out.add_term(v, coeff * c);
    }
    return out;
  }

 private:
  int n_, D_, seed_;
  std::map<Weight, LambdaChain> chains_;
  std::map<std::pair<Weight, SignedPerm>, QKClass> qrows_;
  std::map<std::pair<Weight, SignedPerm>, std::map<SignedPerm, CharElem>> crows_;
};

// ---------------------------------------------------------------------------
// Raw semi-infinite expansion (debug/audit mode).
//
// Basis elements are pairs (w, xi) with xi in simple-coroot coordinates of
// total degree <= D, mirroring Q^xi [O^w] under the basis correspondence.

struct SemiKey {
  SignedPerm w;
  std::vector<int> xi;  // simple-coroot coordinates, entries >= 0

  bool operator<(const SemiKey& o) const {
    if (w != o.w) return w < o.w;
    return xi < o.xi;
  }
  bool operator==(const SemiKey& o) const { return w == o.w && xi == o.xi; }
};

class SemiInfiniteClass {
 public:
  SemiInfiniteClass(int n, int trunc_degree) : n_(n), D_(trunc_degree) {}

  int rank() const { return n_; }
  int trunc_degree() const { return D_; }
  const std::map<SemiKey, CharElem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(const SemiKey& key, const CharElem& c) {
    if (c.is_zero()) return;
    int deg = 0;
    for (int v : key.xi) {
      if (v < 0) throw std::invalid_argument("SemiInfiniteClass: negative shift");
      deg += v;
    }
    if (deg > D_) return;
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
      coeffs_[key] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  SemiInfiniteClass operator+(const SemiInfiniteClass& o) const {
    check(o);
    SemiInfiniteClass r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term(k, c);
    return r;
  }
  SemiInfiniteClass operator-(const SemiInfiniteClass& o) const {
    check(o);
    SemiInfiniteClass r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term(k, -c);
    return r;
  }

  // image under the translation shift t_{alpha_j^vee}
  SemiInfiniteClass shifted(int j) const {
    SemiInfiniteClass r(n_, D_);
    for (const auto& [k, c] : coeffs_) {
      SemiKey k2 = k;
      k2.xi[j - 1] += 1;
      r.add_term(k2, c);
    }
    return r;
  }

  // (1 - st_j) applied to this class
  SemiInfiniteClass one_minus_shift(int j) const { return *this - shifted(j); }

  // sum_{m>=0} st_j^m applied to this class, truncated
  SemiInfiniteClass geometric_shift(int j) const {
    SemiInfiniteClass r = *this;
    SemiInfiniteClass cur = *this;
    for (int m = 1; m <= D_; ++m) {
      cur = cur.shifted(j);
      if (cur.is_zero()) break;
      r = r + cur;
    }
    return r;
  }

  bool operator==(const SemiInfiniteClass& o) const {
    check(o);
    return coeffs_ == o.coeffs_;
  }

 private:
  int n_, D_;
  std::map<SemiKey, CharElem> coeffs_;

  void check(const SemiInfiniteClass& o) const {
    if (n_ != o.n_ || D_ != o.D_)
      throw std::invalid_argument("SemiInfiniteClass: mismatched rank or truncation");
  }
};

namespace detail {

inline std::vector<int> coroot_to_simple_coords(const Coroot& xi) {
  int n = xi.rank();
  std::vector<int> d(n, 0);
  int acc = 0;
  for (int i = 0; i < n; ++i) {
    acc += xi[i];
    if (acc < 0) throw std::invalid_argument("coroot not in the positive cone");
    d[i] = acc;
  }
  return d;
}

}  // namespace detail

// Basis correspondence e^mu Q^xi [O^w] <-> e^{-mu} (shift by xi) [O_{Q(w)}].
inline SemiInfiniteClass phi(const QKClass& z) {
  SemiInfiniteClass out(z.rank(), z.trunc_degree());
  for (const auto& [w, poly] : z.coeffs()) {
    for (const auto& [qexp, c] : poly.terms()) out.add_term(SemiKey{w, qexp}, c.conj());
  }
  return out;
}

// [O_{Q(w)}(lambda)] for lambda = +-eps_J, with the partition-shift factors
// applied explicitly: geometric shift series over L_J for +eps_J, over M_J
// for -eps_J.
inline SemiInfiniteClass semi_infinite_expand(Engine& eng, const Weight& lambda,
                                              const SignedPerm& w) {
  auto [sign, J] = detail::split_eps_J(lambda);
  int n = eng.rank(), D = eng.trunc_degree();
  SemiInfiniteClass base(n, D);
  for (const AdmissibleRecord& rec : admissible_subsets(w, eng.chain(lambda))) {
    BigInt sgn = rec.neg_count % 2 == 0 ? 1 : -1;
    base.add_term(SemiKey{rec.end, detail::coroot_to_simple_coords(rec.down)},
                  CharElem::monomial(rec.wt, sgn));
  }
  BoundarySets b = boundary_sets(n, J);
  const std::vector<int>& shifts = sign > 0 ? b.L : b.M;
  for (int j : shifts) base = base.geometric_shift(j);
  return base;
}

}  // namespace qkc
