#pragma once

#include <Eigen/Core>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cob2 {

/// Exact rational scalar on 64-bit numerator/denominator. Every result is
/// stored fully reduced with a positive denominator; intermediates run in
/// 128-bit arithmetic and narrowing overflow throws instead of wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit, mirrors integer literals
  Rational(long long n, long long d) { assign(n, d); }

  static Rational from_string(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  using i128 = __int128;

  long long num_ = 0;
  long long den_ = 1;

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static long long narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
  }

  static Rational make(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) return Rational();
    i128 g = gcd128(n, d);
    Rational r;
    r.num_ = narrow(n / g);
    r.den_ = narrow(d / g);
    return r;
  }

  void assign(long long n, long long d) { *this = make(n, d); }
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

inline Rational Rational::from_string(std::string_view text) {
  auto parse_int = [](std::string_view s) -> long long {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw std::invalid_argument("bad rational literal: '" + std::string(s) + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

/// True if r is a square in Q; writes the non-negative root when so.
inline bool rational_sqrt(const Rational& r, Rational* root) {
  if (r.is_negative()) return false;
  auto isqrt = [](long long v) -> long long {
    long long s = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
  };
  long long sn = isqrt(r.num());
  long long sd = isqrt(r.den());
  if (sn * sn != r.num() || sd * sd != r.den()) return false;
  if (root) *root = Rational(sn, sd);
  return true;
}

}  // namespace cob2

namespace Eigen {

template <>
struct NumTraits<cob2::Rational> : GenericNumTraits<cob2::Rational> {
  using Real = cob2::Rational;
  using NonInteger = cob2::Rational;
  using Nested = cob2::Rational;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 10,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
