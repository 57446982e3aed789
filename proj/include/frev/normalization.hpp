#pragma once

#include <optional>

#include "frev/centralizer.hpp"
#include "frev/map2.hpp"
#include "frev/onevar.hpp"

namespace frev {

struct PDResult {
  /// Tangent to the identity, with F K = K embed(G).
  Map2 K;
  CentElem G;
  int degree = 0;
};

/// Poincare-Dulac reduction of F with L(F) = diag(lambda, 1/lambda), lambda
/// of infinite order. K carries no resonant monomials beyond degree one.
PDResult pd_normalize(const Map2& f);

/// w = beta t + ... with f(w) = w(g), if one exists at this truncation.
std::optional<Series1> conjugate_1d(const Series1& f, const Series1& g, const Scalar& beta);

struct RhoToFk {
  Series1 chi;
  int k = 0;
};

/// chi with chi^-1 rho chi = f_k.
RhoToFk pd_conjugate_rho_to_fk(const Series1& rho);

/// phi1 = 1 + ... with phi1 / phi1(rho) = target, for target = 1 + O(t^(k+1))
/// and rho = t + a t^(k+1) + ..., a != 0.
Series1 solve_phi1_functional(const Series1& target, const Series1& rho, int k);

}  // namespace frev
