// Type C_n root and weight arithmetic, and the hyperoctahedral Weyl group
// in signed-window form.
//
// Weights live in the epsilon-coordinate lattice Z^n. The positive roots are
//   e_i - e_j, e_i + e_j (i < j) and 2 e_i,
// n^2 in total. Weyl group elements are stored as windows (w(1),...,w(n))
// with entries in {+-1,...,+-n}; barred letters of the interval
// [1,n,bar n,...,bar 1] are represented by negative integers, so the
// extended action w(-j) = -w(j) is automatic. Lengths are computed by
// counting inverted positive roots; no reduced words anywhere.

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkc {

class Weight {
 public:
  Weight() = default;
  explicit Weight(int n) : c_(n, 0) {}
  explicit Weight(std::vector<int> coords) : c_(std::move(coords)) {}

  static Weight fundamental(int n, int j) {
    if (j < 1 || j > n) throw std::invalid_argument("fundamental: index out of range");
    Weight w(n);
    for (int i = 0; i < j; ++i) w.c_[i] = 1;
    return w;
  }

  static Weight rho(int n) {
    Weight w(n);
    for (int i = 0; i < n; ++i) w.c_[i] = n - i;
    return w;
  }

  int rank() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[i]; }  // 0-based
  const std::vector<int>& coords() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
  }

  Weight operator+(const Weight& o) const {
    Weight r = *this;
    for (int i = 0; i < rank(); ++i) r.c_[i] += o.c_[i];
    return r;
  }
  Weight operator-(const Weight& o) const {
    Weight r = *this;
    for (int i = 0; i < rank(); ++i) r.c_[i] -= o.c_[i];
    return r;
  }
  Weight operator-() const {
    Weight r = *this;
    for (int& v : r.c_) v = -v;
    return r;
  }
  Weight operator*(int s) const {
    Weight r = *this;
    for (int& v : r.c_) v *= s;
    return r;
  }

  bool operator==(const Weight& o) const { return c_ == o.c_; }
  bool operator!=(const Weight& o) const { return c_ != o.c_; }
  bool operator<(const Weight& o) const { return c_ < o.c_; }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < rank(); ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> c_;
};

// eps_J = sign * sum_{j in J} eps_j, J given as 1-based indices.
inline Weight eps_J(int n, const std::vector<int>& J, int sign = 1) {
  Weight w(n);
  std::vector<int> c(n, 0);
  for (int j : J) {
    if (j < 1 || j > n) throw std::invalid_argument("eps_J: index out of range");
    c[j - 1] = sign;
  }
  return Weight(c);
}

struct BoundarySets {
  std::vector<int> L;  // j in J with j+1 not in J    (n+1 never in J)
  std::vector<int> M;  // j not in J with j+1 in J
};

inline BoundarySets boundary_sets(int n, const std::vector<int>& J) {
  std::vector<bool> in(n + 2, false);
  for (int j : J) {
    if (j < 1 || j > n) throw std::invalid_argument("boundary_sets: index out of range");
    in[j] = true;
  }
  BoundarySets b;
  for (int j = 1; j <= n; ++j) {
    if (in[j] && !in[j + 1]) b.L.push_back(j);
    if (!in[j] && in[j + 1]) b.M.push_back(j);
  }
  return b;
}

class Coroot {
 public:
  Coroot() = default;
  explicit Coroot(int n) : c_(n, 0) {}
  explicit Coroot(std::vector<int> coords) : c_(std::move(coords)) {}

  int rank() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[i]; }
  const std::vector<int>& coords() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
  }

  Coroot operator+(const Coroot& o) const {
    Coroot r = *this;
    for (int i = 0; i < rank(); ++i) r.c_[i] += o.c_[i];
    return r;
  }

  bool operator==(const Coroot& o) const { return c_ == o.c_; }
  bool operator<(const Coroot& o) const { return c_ < o.c_; }

 private:
  std::vector<int> c_;  // coefficients of eps^vee_i
};

inline Coroot simple_coroot(int n, int i) {
  // alpha_i^vee = e_i - e_{i+1} for i < n, alpha_n^vee = e_n
  Coroot c(n);
  std::vector<int> v(n, 0);
  v[i - 1] = 1;
  if (i < n) v[i] = -1;
  return Coroot(v);
}

enum class RootKind { diff, sum, twice };  // e_i-e_j, e_i+e_j, 2e_i

class Root {
 public:
  Root(RootKind kind, int i, int j, bool negative = false)
      : kind_(kind), i_(i), j_(j), neg_(negative) {
    if (kind == RootKind::twice) {
      j_ = i_;
      if (i_ < 1) throw std::invalid_argument("Root: bad index");
    } else if (!(1 <= i_ && i_ < j_)) {
      throw std::invalid_argument("Root: requires i < j");
    }
  }

  static std::optional<Root> from_weight(const Weight& w) {
    int n = w.rank();
    std::vector<int> nz;
    for (int i = 0; i < n; ++i)
      if (w[i] != 0) nz.push_back(i);
    if (nz.size() == 1) {
      int i = nz[0];
      if (w[i] == 2) return Root(RootKind::twice, i + 1, i + 1, false);
      if (w[i] == -2) return Root(RootKind::twice, i + 1, i + 1, true);
      return std::nullopt;
    }
    if (nz.size() == 2) {
      int i = nz[0], j = nz[1];
      if (w[i] == 1 && w[j] == -1) return Root(RootKind::diff, i + 1, j + 1, false);
      if (w[i] == -1 && w[j] == 1) return Root(RootKind::diff, i + 1, j + 1, true);
      if (w[i] == 1 && w[j] == 1) return Root(RootKind::sum, i + 1, j + 1, false);
      if (w[i] == -1 && w[j] == -1) return Root(RootKind::sum, i + 1, j + 1, true);
      return std::nullopt;
    }
    return std::nullopt;
  }

  RootKind kind() const { return kind_; }
  int i() const { return i_; }
  int j() const { return j_; }
  bool is_positive() const { return !neg_; }

  Root abs() const {
    Root r = *this;
    r.neg_ = false;
    return r;
  }
  Root negated() const {
    Root r = *this;
    r.neg_ = !r.neg_;
    return r;
  }

  Weight weight(int n) const {
    std::vector<int> c(n, 0);
    int s = neg_ ? -1 : 1;
    switch (kind_) {
      case RootKind::diff:
        c[i_ - 1] = s;
        c[j_ - 1] = -s;
        break;
      case RootKind::sum:
        c[i_ - 1] = s;
        c[j_ - 1] = s;
        break;
      case RootKind::twice:
        c[i_ - 1] = 2 * s;
        break;
    }
    return Weight(c);
  }

  Coroot coroot(int n) const {
    std::vector<int> c(n, 0);
    int s = neg_ ? -1 : 1;
    switch (kind_) {
      case RootKind::diff:
        c[i_ - 1] = s;
        c[j_ - 1] = -s;
        break;
      case RootKind::sum:
        c[i_ - 1] = s;
        c[j_ - 1] = s;
        break;
      case RootKind::twice:
        c[i_ - 1] = s;
        break;
    }
    return Coroot(c);
  }

  bool operator==(const Root& o) const {
    return kind_ == o.kind_ && i_ == o.i_ && j_ == o.j_ && neg_ == o.neg_;
  }
  bool operator<(const Root& o) const {
    auto key = [](const Root& r) {
      return std::tuple<int, int, int, int>(r.i_, static_cast<int>(r.kind_), r.j_,
                                            r.neg_ ? 1 : 0);
    };
    return key(*this) < key(o);
  }

  std::string str() const {
    std::string s = neg_ ? "-" : "";
    switch (kind_) {
      case RootKind::diff:
        return s + "e" + std::to_string(i_) + "-e" + std::to_string(j_);
      case RootKind::sum:
        return s + "e" + std::to_string(i_) + "+e" + std::to_string(j_);
      case RootKind::twice:
        return s + "2e" + std::to_string(i_);
    }
    return s;
  }

 private:
  RootKind kind_;
  int i_, j_;  // 1-based, i < j for diff/sum, j == i for twice
  bool neg_;
};

// The n^2 positive roots in lexicographic (i, kind, j) order.
inline std::vector<Root> positive_roots(int n) {
  if (n < 1) throw std::invalid_argument("positive_roots: rank must be >= 1");
  std::vector<Root> out;
  out.reserve(n * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.emplace_back(RootKind::diff, i, j);
    for (int j = i + 1; j <= n; ++j) out.emplace_back(RootKind::sum, i, j);
    out.emplace_back(RootKind::twice, i, i);
  }
  return out;
}

inline int pairing(const Weight& lambda, const Root& alpha) {
  Coroot cv = alpha.coroot(lambda.rank());
  int s = 0;
  for (int i = 0; i < lambda.rank(); ++i) s += lambda[i] * cv[i];
  return s;
}

inline int pairing(const Weight& lambda, const Coroot& cv) {
  int s = 0;
  for (int i = 0; i < lambda.rank(); ++i) s += lambda[i] * cv[i];
  return s;
}

class SignedPerm {
 public:
  explicit SignedPerm(std::vector<int> window) : w_(std::move(window)) {
    int n = rank();
    std::vector<bool> seen(n + 1, false);
    for (int v : w_) {
      int a = v < 0 ? -v : v;
      if (a < 1 || a > n || seen[a]) throw std::invalid_argument("SignedPerm: bad window");
      seen[a] = true;
    }
  }

  static SignedPerm identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return SignedPerm(std::move(w));
  }

  static SignedPerm longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = -(i + 1);
    return SignedPerm(std::move(w));
  }

  int rank() const { return static_cast<int>(w_.size()); }
  const std::vector<int>& window() const { return w_; }

  // signed value at position j; j may be negative (barred), w(-j) = -w(j)
  int operator()(int j) const {
    if (j > 0) return w_[j - 1];
    return -w_[-j - 1];
  }

  bool is_identity() const {
    for (int i = 0; i < rank(); ++i)
      if (w_[i] != i + 1) return false;
    return true;
  }

  Weight apply(const Weight& lambda) const {
    std::vector<int> c(rank(), 0);
    for (int j = 1; j <= rank(); ++j) {
      int v = w_[j - 1];
      int a = v < 0 ? -v : v;
      c[a - 1] += (v < 0 ? -1 : 1) * lambda[j - 1];
    }
    return Weight(c);
  }

  // this composed after v: (uv)(k) = u(v(k))
  SignedPerm compose(const SignedPerm& v) const {
    std::vector<int> c(rank());
    for (int k = 1; k <= rank(); ++k) c[k - 1] = (*this)(v(k));
    return SignedPerm(std::move(c));
  }

  // right multiplication by the reflection of |alpha|
  SignedPerm reflect(const Root& alpha) const {
    std::vector<int> c = w_;
    int i = alpha.i(), j = alpha.j();
    switch (alpha.kind()) {
      case RootKind::diff:
        std::swap(c[i - 1], c[j - 1]);
        break;
      case RootKind::sum:
        c[i - 1] = -w_[j - 1];
        c[j - 1] = -w_[i - 1];
        break;
      case RootKind::twice:
        c[i - 1] = -w_[i - 1];
        break;
    }
    return SignedPerm(std::move(c));
  }

  int length() const {
    int n = rank(), len = 0;
    for (const Root& alpha : positive_roots(n)) {
      Weight im = apply(alpha.weight(n));
      for (int i = 0; i < n; ++i) {
        if (im[i] != 0) {
          if (im[i] < 0) ++len;
          break;
        }
      }
    }
    return len;
  }

  bool operator==(const SignedPerm& o) const { return w_ == o.w_; }
  bool operator!=(const SignedPerm& o) const { return w_ != o.w_; }
  bool operator<(const SignedPerm& o) const { return w_ < o.w_; }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < rank(); ++i) {
      if (i) s += ",";
      s += std::to_string(w_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> w_;
};

// All 2^n n! elements, windows in lexicographic order.
inline std::vector<SignedPerm> all_elements(int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::vector<SignedPerm> out;
  std::vector<std::vector<int>> windows;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> w = base;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) w[i] = -w[i];
      windows.push_back(std::move(w));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(windows.begin(), windows.end());
  out.reserve(windows.size());
  for (auto& w : windows) out.emplace_back(std::move(w));
  return out;
}

}  // namespace qkc
