#pragma once

#include <Eigen/Core>

#include <optional>

#include "cob2/rational.hpp"

namespace cob2 {

/// Prime-field scalar F_p with P a small prime known at compile time.
template <int P>
class Fp {
  static_assert(P >= 2, "modulus must be at least 2");

 public:
  Fp() = default;
  Fp(long long v) : v_(static_cast<int>(((v % P) + P) % P)) {}  // NOLINT: implicit

  int value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) { return Fp((a.v_ + b.v_) % P); }
  friend Fp operator-(Fp a, Fp b) { return Fp((a.v_ - b.v_ + P) % P); }
  friend Fp operator*(Fp a, Fp b) {
    return Fp(static_cast<long long>(a.v_) * b.v_ % P);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(P - v_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
    // Fermat: v^(P-2)
    long long base = v_, acc = 1;
    int e = P - 2;
    while (e > 0) {
      if (e & 1) acc = acc * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return Fp(acc);
  }

 private:
  int v_ = 0;
};

/// Reduction of a rational mod p; empty when p divides the denominator.
template <int P>
std::optional<Fp<P>> reduce_mod(const Rational& r) {
  if (r.den() % P == 0) return std::nullopt;
  return Fp<P>(r.num()) / Fp<P>(r.den());
}

}  // namespace cob2

namespace Eigen {

template <int P>
struct NumTraits<cob2::Fp<P>> : GenericNumTraits<cob2::Fp<P>> {
  using Real = cob2::Fp<P>;
  using NonInteger = cob2::Fp<P>;
  using Nested = cob2::Fp<P>;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 2,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
