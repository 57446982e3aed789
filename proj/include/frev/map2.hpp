#pragma once

// Formal maps of (C^2, 0) truncated at total degree N.

#include <optional>
#include <string>
#include <vector>

#include "frev/biseries.hpp"

namespace frev {

/// (a z1 + b z2, c z1 + d z2).
struct LinearMap2 {
  Scalar a, b, c, d;

  Scalar det() const { return a * d - b * c; }
  Scalar trace() const { return a + d; }
  LinearMap2 inverse() const;
  friend LinearMap2 operator*(const LinearMap2& x, const LinearMap2& y);
  friend bool operator==(const LinearMap2& x, const LinearMap2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  static LinearMap2 identity(FieldSpec field);
  static LinearMap2 diag(const Scalar& x, const Scalar& y);
};

struct Map2 {
  BiSeries comp1;
  BiSeries comp2;

  Map2() = default;
  Map2(BiSeries c1, BiSeries c2);

  FieldSpec field() const { return comp1.field(); }
  int trunc() const { return comp1.trunc(); }

  static Map2 identity(FieldSpec field, int trunc);
  static Map2 linear(const LinearMap2& l, int trunc);

  bool is_identity() const;
  Map2 truncate(int n) const { return Map2(comp1.truncate(n), comp2.truncate(n)); }

  friend bool operator==(const Map2& x, const Map2& y) { return x.comp1 == y.comp1 && x.comp2 == y.comp2; }
  friend bool operator!=(const Map2& x, const Map2& y) { return !(x == y); }
};

/// Verdict plus optional witnesses, with the truncation the claim holds at.
struct Certificate {
  bool verdict = false;
  std::string tag;
  std::optional<Map2> witness;
  std::optional<Map2> conjugator;
  int degree = 0;
  std::vector<std::string> notes;
};

/// s(G1, G2) for a bivariate series s; G has no constant term.
BiSeries substitute(const BiSeries& s, const Map2& g);
/// F o G.
Map2 compose(const Map2& f, const Map2& g);
Map2 inverse(const Map2& f);
/// l o f without a general substitution.
Map2 apply_linear(const LinearMap2& l, const Map2& f);
/// Compositional power; negative exponents use the inverse.
Map2 iterate(const Map2& f, long n);

LinearMap2 linear_part(const Map2& f);
/// Columns are eigenvectors of l for the eigenvalues l1 and l2.
LinearMap2 eigenbasis(const LinearMap2& l, const Scalar& l1, const Scalar& l2);
/// Degree-k homogeneous part L_k(F).
Map2 homog_part(const Map2& f, int k);

/// Every monomial of comp1 is z1 p^j and of comp2 is z2 p^j.
bool is_resonant(const Map2& f);
/// Every monomial of comp1 is z2 p^j and of comp2 is z1 p^j.
bool is_inverse_resonant(const Map2& f);

/// Reversibility of a linear map in GL(2), with a linear reverser witness and
/// a conjugator to a canonical form when the eigenvalues lie in the field.
Certificate linear_is_reversible(const LinearMap2& l, int trunc);

/// H with L(th) H = H th, by averaging over the cyclic group of th.
Map2 linearize_finite_order(const Map2& th, int order);

std::string map_str(const Map2& f);

}  // namespace frev
