#pragma once

// One-variable germs: normal forms, formal flows, the residue invariant and
// the reversibility test in the group of formal maps of (C, 0).

#include <optional>
#include <string>
#include <vector>

#include "frev/series1.hpp"

namespace frev {

/// mu * t * (1 + lam t^k)^(-1/k).
Series1 phi_normal_form(const Scalar& mu, int lam, int k, int trunc);
/// t * (1 - k t^k)^(-1/k).
Series1 fk(FieldSpec field, int k, int trunc);
/// t * (1 - k alpha t^k)^(-1/k), the formal alpha-iterate of fk.
Series1 fk_iterate(int k, const Scalar& alpha, int trunc);

/// Time-alpha map of t' = v(t): sum_n alpha^n/n! D^n t with D g = v g'.
Series1 flow(const Series1& v, const Scalar& alpha);
/// The v with flow(v, 1) = f, for f tangent to the identity.
Series1 generator(const Series1& f);
/// f^alpha through the generator.
Series1 fractional_iterate(const Series1& f, const Scalar& alpha);

struct TangentIdInvariants {
  int k = 0;
  /// Residue coefficient after the t^(k+1) coefficient is scaled to 1.
  Scalar c;
  /// Coefficient of t^(k+1) before scaling.
  Scalar a;
  /// w with w^-1 f w = t + s t^(k+1) + c_raw t^(2k+1) + O(t^(2k+2)), where
  /// s = 1 when `scaled` and s = a otherwise.
  Series1 conjugator;
  bool scaled = false;
};

TangentIdInvariants tangent_id_invariants(const Series1& f);

/// Verdict with an optional reverser h (h^-1 f h = f^-1).
struct Certificate1 {
  bool verdict = false;
  std::optional<Series1> witness;
  int degree = 0;
  std::vector<std::string> notes;
};

Certificate1 s1_is_reversible(const Series1& f);

/// h with h^-1 f h = f^-1, searched over every root of unity of the field
/// as the linear coefficient.
std::optional<Series1> find_reverser_1d(const Series1& f);

/// omega t (1 + nu t^k)^(-1/k); requires omega^k = -1.
Series1 reverser_family(int k, const Scalar& omega, const Scalar& nu, int trunc);

/// H with L H = H th for L = th'(0) t, by averaging over the cyclic group.
Series1 linearize_finite_order(const Series1& th, int order);

enum class DichotomyBranch { Constant, FiniteOrder };

struct DichotomyResult {
  DichotomyBranch branch = DichotomyBranch::Constant;
  int order = 0;
};

DichotomyResult invariance_dichotomy(const Series1& phi, const Series1& rho, int max_order);

/// Least j <= bound with f^j = t, if any.
std::optional<int> compositional_order(const Series1& f, int bound);

}  // namespace frev
