// Reduced lambda-chains by exact generic-segment enumeration.
//
// A chain for lambda records, in crossing order, every hyperplane
// H_{alpha,m} met by the segment p - t*lambda, t in [0,1], for a rational
// base point p interior to the fundamental alcove. Each crossing of
// {<xi, alpha^vee> = m} with s = sign<lambda, alpha^vee> is emitted as the
// step (gamma, l) = (s*alpha, -s*m), so that the crossed wall lies in
// H_{gamma,-l}. All arithmetic is exact; a tie between two crossing times
// means the base point was non-generic and the walk retries with the next
// perturbation seed.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qkc/rootsys.hpp"

namespace qkc {

struct Rational {
  long long num = 0, den = 1;  // den > 0, reduced

  Rational() = default;
  Rational(long long n, long long d) { *this = make(n, d); }

  static Rational make(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr __int128 lim = 0x7fffffffffffffffLL;
    if (n > lim || n < -lim || d > lim) throw std::overflow_error("Rational: out of range");
    Rational r;
    r.num = static_cast<long long>(n);
    r.den = static_cast<long long>(d);
    return r;
  }

  Rational operator+(const Rational& o) const {
    return make(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
                static_cast<__int128>(den) * o.den);
  }
  Rational operator-(const Rational& o) const {
    return make(static_cast<__int128>(num) * o.den - static_cast<__int128>(o.num) * den,
                static_cast<__int128>(den) * o.den);
  }
  Rational operator*(const Rational& o) const {
    return make(static_cast<__int128>(num) * o.num, static_cast<__int128>(den) * o.den);
  }
  Rational operator*(long long s) const { return make(static_cast<__int128>(num) * s, den); }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rational& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
  }
  bool operator>(const Rational& o) const { return o < *this; }
};

struct ChainStep {
  Root gamma;  // possibly negative
  int level;   // l_k: the crossed wall lies in H_{gamma,-level}

  bool operator==(const ChainStep& o) const { return gamma == o.gamma && level == o.level; }
};

struct LambdaChain {
  Weight lambda;
  std::vector<ChainStep> steps;
};

// s_{gamma,-l}(mu) = mu - (<mu, gamma^vee> + l) * gamma
inline Weight affine_reflect(const ChainStep& step, const Weight& mu) {
  int n = mu.rank();
  int c = pairing(mu, step.gamma) + step.level;
  return mu - step.gamma.weight(n) * c;
}

inline std::vector<Rational> affine_reflect(const ChainStep& step, const std::vector<Rational>& x) {
  int n = static_cast<int>(x.size());
  Coroot cv = step.gamma.coroot(n);
  Rational pair(step.level, 1);
  for (int i = 0; i < n; ++i) pair = pair + x[i] * cv[i];
  Weight g = step.gamma.weight(n);
  std::vector<Rational> r = x;
  for (int i = 0; i < n; ++i) r[i] = r[i] - pair * g[i];
  return r;
}

// Deterministic rational interior point of the fundamental alcove,
//   p_i = (2(n-i)+1) / (2n + s) + P^{-(i+1)},
// with offset s large enough that all pairings <p, alpha^vee> land in (0,1).
// The inverse-power tail breaks every small-integer linear relation among
// the coordinates: a tie between two crossing times would force an integer
// combination sum k_i p_i with |k_i| < P/2 to be integral, and the balanced
// base-P digits of the tail then force k = 0. The plain arithmetic
// progression alone is NOT generic (p_1 + p_3 = 2 p_2 ties sum-root and
// doubled-root crossings from rank 3 on, for every offset).
inline std::vector<Rational> alcove_base_point(int n, int seed) {
  if (seed < 0) throw std::invalid_argument("alcove_base_point: seed must be >= 0");
  long long s = 2 * n - 1 + seed;
  long long P = 31 + 8 * seed;
  std::vector<Rational> p(n);
  for (int i = 1; i <= n; ++i) {
    long long tail_den = 1;
    for (int t = 0; t <= i; ++t) tail_den *= P;
    p[i - 1] = Rational(2 * (n - i) + 1, 2 * n + s) + Rational(1, tail_den);
  }
  return p;
}

inline LambdaChain reduced_chain(const Weight& lambda, int seed = 0) {
  int n = lambda.rank();
  const auto roots = positive_roots(n);
  constexpr int kMaxRetries = 16;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<Rational> p = alcove_base_point(n, seed + attempt);
    struct Crossing {
      Rational t;
      Root gamma;
      int level;
    };
    std::vector<Crossing> crossings;
    bool degenerate = false;
    for (const Root& alpha : roots) {
      int a = pairing(lambda, alpha);
      if (a == 0) continue;
      Coroot cv = alpha.coroot(n);
      Rational start(0, 1);
      for (int i = 0; i < n; ++i) start = start + p[i] * cv[i];
      // crossings of <p - t*lambda, alpha^vee> = m for integers m strictly
      // between start and start - a; with start in (0,1) there are |a| of them
      int lo = a > 0 ? 1 - a : 1;
      int hi = a > 0 ? 0 : -a;
      int s = a > 0 ? 1 : -1;
      for (int m = lo; m <= hi; ++m) {
        Rational t = (start - Rational(m, 1)) * Rational(1, a);
        crossings.push_back({t, s > 0 ? alpha : alpha.negated(), -s * m});
      }
    }
    std::sort(crossings.begin(), crossings.end(),
              [](const Crossing& x, const Crossing& y) { return x.t < y.t; });
    for (std::size_t i = 0; i + 1 < crossings.size(); ++i) {
      if (crossings[i].t == crossings[i + 1].t) {
        degenerate = true;
        break;
      }
    }
    if (degenerate) continue;
    LambdaChain chain{lambda, {}};
    chain.steps.reserve(crossings.size());
    for (const auto& c : crossings) chain.steps.push_back(ChainStep{c.gamma, c.level});
    return chain;
  }
  throw std::runtime_error("reduced_chain: degenerate base point");
}

}  // namespace qkc
