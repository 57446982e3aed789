#pragma once

// Truncated univariate series c_0 + c_1 t + ... + c_N t^N over Q(zeta_m).

#include <climits>
#include <string>
#include <vector>

#include "frev/field.hpp"

namespace frev {

inline constexpr int kInfOrder = INT_MAX;

class Series1 {
 public:
  Series1() : Series1(FieldSpec(), 0) {}
  Series1(FieldSpec field, int trunc);
  /// Coefficients c_0..c_N; the truncation is size() - 1.
  Series1(FieldSpec field, std::vector<Scalar> coeffs);

  static Series1 identity(FieldSpec field, int trunc);
  static Series1 constant(const Scalar& c, int trunc);
  static Series1 monomial(const Scalar& c, int degree, int trunc);
  /// Rational coefficients from the front; the rest are zero.
  static Series1 from_rationals(FieldSpec field, int trunc, const std::vector<mpq_class>& coeffs);

  FieldSpec field() const { return field_; }
  int trunc() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
  Scalar& operator[](int j) { return c_[static_cast<std::size_t>(j)]; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  /// Least j with c_j != 0, or kInfOrder.
  int order() const;
  bool is_zero() const { return order() == kInfOrder; }
  bool is_identity() const;
  bool is_constant() const;

  /// Drops coefficients above n (n <= trunc).
  Series1 truncate(int n) const;
  /// Appends zeros up to degree n (n >= trunc). Only valid when the caller
  /// knows the extra coefficients vanish.
  Series1 pad(int n) const;

  Series1 operator-() const;
  Series1& operator+=(const Series1& o);
  Series1& operator-=(const Series1& o);
  Series1& operator*=(const Scalar& s);

  friend Series1 operator+(Series1 a, const Series1& b) { return a += b; }
  friend Series1 operator-(Series1 a, const Series1& b) { return a -= b; }
  friend Series1 operator*(Series1 a, const Scalar& s) { return a *= s; }
  friend Series1 operator*(const Scalar& s, Series1 a) { return a *= s; }
  friend Series1 operator*(const Series1& a, const Series1& b);
  friend bool operator==(const Series1& a, const Series1& b) { return a.field_ == b.field_ && a.c_ == b.c_; }
  friend bool operator!=(const Series1& a, const Series1& b) { return !(a == b); }

  std::string str() const;

 private:
  FieldSpec field_;
  std::vector<Scalar> c_;
};

void check_trunc(const Series1& a, const Series1& b);

/// f(g(t)); requires ord(g) >= 1.
Series1 compose(const Series1& f, const Series1& g);
/// Compositional inverse; requires c_0 = 0 and c_1 != 0.
Series1 comp_inverse(const Series1& f);
/// Multiplicative inverse; requires c_0 != 0.
Series1 mul_inverse(const Series1& u);
/// a / b for a unit b.
Series1 divide(const Series1& a, const Series1& b);
/// r with r^n = u and r(0) = root.
Series1 nth_root_unit(const Series1& u, int n, const Scalar& root);
/// u^alpha for u(0) = 1 and any field exponent alpha.
Series1 unit_power(const Series1& u, const Scalar& alpha);
/// (1 + coef t^k)^alpha.
Series1 binomial_series(const Scalar& coef, int k, const Scalar& alpha, int trunc);
/// exp(w) for w(0) = 0.
Series1 exp_series(const Series1& w);
/// Multiplicative integer power (negative needs a unit).
Series1 pow(const Series1& f, long e);
/// Compositional n-th iterate (negative uses the inverse).
Series1 iterate(const Series1& f, long n);
/// d/dt, truncated one degree lower.
Series1 derivative(const Series1& f);
/// t * f, one degree higher.
Series1 times_t(const Series1& f);
/// f / t, one degree lower; requires c_0 = 0.
Series1 div_t(const Series1& f);

}  // namespace frev
