#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_m), stored densely as
// residues of Q[x] modulo the m-th cyclotomic polynomial.

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "frev/error.hpp"

namespace frev {

struct FieldData;
class Scalar;

/// Handle to an interned cyclotomic field. Two specs compare equal iff they
/// share the same conductor m; handles are cheap to copy and never dangle.
class FieldSpec {
 public:
  FieldSpec();  // Q, i.e. m = 1
  static FieldSpec make(int m);

  int m() const;
  int degree() const;
  /// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
  const std::vector<mpz_class>& cyclotomic() const;
  /// Number of roots of unity contained in the field (m or 2m).
  int unity_order() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar zeta() const;
  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& q) const;

  const FieldData& data() const { return *d_; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.d_ == b.d_; }

 private:
  explicit FieldSpec(const FieldData* d) : d_(d) {}
  const FieldData* d_;
};

/// Element of Q(zeta_m). Always stored reduced, so equality is coefficient-wise.
class Scalar {
 public:
  Scalar() : Scalar(FieldSpec()) {}
  explicit Scalar(FieldSpec field);
  Scalar(FieldSpec field, const mpq_class& q);
  /// Residue of the given polynomial (lowest degree first); reduced on entry.
  Scalar(FieldSpec field, std::vector<mpq_class> poly);

  FieldSpec field() const { return field_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Constant coefficient; only meaningful when is_rational().
  const mpq_class& rational_part() const { return c_[0]; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  /// *this += a * b without a temporary for the product in the rational case.
  void add_mul(const Scalar& a, const Scalar& b);

  Scalar inverse() const;
  Scalar pow(long e) const;

  /// "a0/b0, a1/b1, ..." in the power basis of zeta_m.
  std::string str() const;
  /// Image under zeta_m -> exp(2 pi i j / m); diagnostics only.
  std::complex<double> embed(int j = 1) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void check_same(const Scalar& o) const;
  void reduce_long(std::vector<mpq_class>& poly) const;

  FieldSpec field_;
  std::vector<mpq_class> c_;
};

/// zeta^(numerator * order / denominator) where order is the number of roots
/// of unity in the field; the result r satisfies r^denominator == 1.
Scalar root_of_unity(FieldSpec field, long numerator, long denominator);

/// All roots of unity in the field, as powers of a generator of that group.
std::vector<Scalar> roots_of_unity(FieldSpec field);

/// Multiplicative order of a root of unity, or 0 when `a` is not one.
int unity_order_of(const Scalar& a);

/// n-th roots of `a` that can be found in the field. Tries rational multiples
/// of roots of unity first, then reconstructs candidates from the complex
/// embeddings; every returned root r satisfies r^n == a exactly.
std::vector<Scalar> field_roots(const Scalar& a, int n);

/// Parses the "a0/b0, a1/b1, ..." form; bare integers are accepted.
Scalar parse_scalar(FieldSpec field, std::string_view text);

}  // namespace frev
