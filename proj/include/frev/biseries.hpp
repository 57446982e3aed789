#pragma once

// Sparse truncated series in z1, z2 with total degree at most N. Terms are
// kept in graded-lex order: total degree ascending, then i descending.

#include <map>
#include <string>
#include <vector>

#include "frev/field.hpp"

namespace frev {

struct Term {
  int i = 0;
  int j = 0;
  Scalar c;
};

class BiSeries {
 public:
  BiSeries() : BiSeries(FieldSpec(), 0) {}
  BiSeries(FieldSpec field, int trunc) : field_(field), trunc_(trunc) {}

  static BiSeries monomial(const Scalar& c, int i, int j, int trunc);

  FieldSpec field() const { return field_; }
  int trunc() const { return trunc_; }
  const std::vector<Term>& terms() const { return terms_; }

  Scalar get(int i, int j) const;
  /// Adds c to the (i, j) coefficient; ignored above the truncation.
  void add(int i, int j, const Scalar& c);
  void set(int i, int j, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  /// Least total degree present, or -1 when zero.
  int order() const;
  BiSeries truncate(int n) const;
  /// Same terms under truncation n >= trunc(); only valid when the caller
  /// knows the coefficients between the two truncations vanish.
  BiSeries pad(int n) const;
  BiSeries homog(int d) const;

  BiSeries operator-() const;
  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  BiSeries& operator*=(const Scalar& s);

  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator*(BiSeries a, const Scalar& s) { return a *= s; }
  friend BiSeries operator*(const Scalar& s, BiSeries a) { return a *= s; }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend bool operator==(const BiSeries& a, const BiSeries& b);
  friend bool operator!=(const BiSeries& a, const BiSeries& b) { return !(a == b); }

  std::string str() const;

 private:
  friend BiSeries mul_trunc(const BiSeries& a, const BiSeries& b, int n);
  FieldSpec field_;
  int trunc_;
  std::vector<Term> terms_;
};

/// Product truncated at total degree n (n <= both truncations).
BiSeries mul_trunc(const BiSeries& a, const BiSeries& b, int n);

/// Components indexed by i - j.
std::map<int, BiSeries> type_decompose(const BiSeries& s);

}  // namespace frev
