// Signed arbitrary-precision integers used as polynomial coefficients.
//
// Little-endian base-2^32 magnitude with a separate sign. Only the
// operations the coefficient rings need are provided: add, subtract,
// multiply, compare, decimal rendering.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkc {

class BigInt {
 public:
  BigInt() = default;

  BigInt(long long v) {  // NOLINT: implicit by design, scalars appear everywhere
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid overflow on LLONG_MIN
    unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                 : static_cast<unsigned long long>(v);
    while (m != 0) {
      mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
      m >>= 32;
    }
  }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
  bool operator!=(const BigInt& o) const { return !(*this == o); }

  bool operator<(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
  }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  BigInt operator+(const BigInt& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
      r.mag_ = add_mag(mag_, o.mag_);
      r.sign_ = sign_;
    } else {
      int c = cmp_mag(mag_, o.mag_);
      if (c == 0) return BigInt();
      if (c > 0) {
        r.mag_ = sub_mag(mag_, o.mag_);
        r.sign_ = sign_;
      } else {
        r.mag_ = sub_mag(o.mag_, mag_);
        r.sign_ = o.sign_;
      }
    }
    return r;
  }

  BigInt operator-(const BigInt& o) const { return *this + (-o); }

  BigInt operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.sign_ = sign_ * o.sign_;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (std::size_t i = 0; i < mag_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < o.mag_.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(mag_[i]) * o.mag_[j] +
                            r.mag_[i + j] + carry;
        r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
        carry = cur >> 32;
      }
      std::size_t k = i + o.mag_.size();
      while (carry != 0) {
        std::uint64_t cur = r.mag_[k] + carry;
        r.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  // Exact only for |v| fitting in long long; used by tests on small values.
  long long to_ll() const {
    if (mag_.size() > 2) throw std::overflow_error("BigInt::to_ll: out of range");
    unsigned long long m = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
    if (m > 0x7fffffffffffffffULL) throw std::overflow_error("BigInt::to_ll: out of range");
    return sign_ < 0 ? -static_cast<long long>(m) : static_cast<long long>(m);
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = m.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
        rem = cur % 1000000000ULL;
      }
      while (!m.empty() && m.back() == 0) m.pop_back();
      std::string chunk = std::to_string(rem);
      if (!m.empty()) chunk = std::string(9 - chunk.size(), '0') + chunk;
      digits = chunk + digits;
    }
    return (sign_ < 0 ? "-" : "") + digits;
  }

 private:
  int sign_ = 0;                    // -1, 0, +1
  std::vector<std::uint32_t> mag_;  // little-endian, no trailing zeros

  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
      std::uint64_t cur = carry;
      if (i < a.size()) cur += a[i];
      if (i < b.size()) cur += b[i];
      r.push_back(static_cast<std::uint32_t>(cur & 0xffffffffULL));
      carry = cur >> 32;
    }
    if (carry != 0) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  // requires a >= b
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
      borrow = 0;
      if (cur < 0) {
        cur += 1LL << 32;
        borrow = 1;
      }
      r[i] = static_cast<std::uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
};

}  // namespace qkc
