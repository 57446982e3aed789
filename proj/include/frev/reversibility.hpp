#pragma once

// Reversers, reversible normal forms and their classification for maps of
// (C^2, 0) whose linear part has eigenvalues lambda, 1/lambda with lambda not
// a root of unity.

#include <optional>
#include <string>
#include <vector>

#include "frev/centralizer.hpp"
#include "frev/map2.hpp"
#include "frev/normalization.hpp"

namespace frev {

enum class NormalKind { Linear, FirstSeries, SecondSeries };

std::string kind_name(NormalKind kind);
NormalKind parse_kind(const std::string& name);

struct NormalFormTag {
  NormalKind kind = NormalKind::Linear;
  int k = 0;
  Scalar lambda;
};

/// First series (lambda (1+p^k) z1, z2 / (lambda (1+p^k))), second series
/// (lambda (1+p^k)^(1/k) (1+2p^k)^(-1/k) z1, z2 / (lambda (1+p^k)^(1/k))),
/// or diag(lambda, 1/lambda). Payload truncation trunc_t.
CentElem normal_form_ce(const NormalFormTag& tag, int trunc_t);
Map2 rv_make_normal_form(const NormalFormTag& tag, int trunc_t);

/// (lambda z1 (1+p^k), z2 (1+p^k+(2k+1)p^(2k)) / lambda).
CentElem polynomial_rep_ce(int k, const Scalar& lam, int trunc_t);
Map2 rv_polynomial_rep(int k, const Scalar& lam, int trunc_t);

/// (sigma lambda z1 exp(w(p)), sigma z2 exp(-w(p)) / lambda); sigma = +-1.
CentElem moser_form_ce(int sigma, const Scalar& lam, const Series1& w);

/// F Th F = Th, i.e. Th^-1 F Th = F^-1.
Certificate rv_verify_reverser(const Map2& f, const Map2& th);
bool ce_reverses(const CentElem& f, const CentElem& th);

/// The map reversed by J_c built from (h, g1): omega = c^-2,
/// rho = omega^-1 h(omega h^-1(t)), g = g1(h^-1), phi = (rho g / t)^(1/2),
/// psi = (rho / (t g))^(1/2) with phi(0) = lambda. h has truncation N+1 and
/// g1 truncation N.
CentElem build_from_data_ce(const Scalar& c, const Series1& h, const Series1& g1, const Scalar& lam);
Map2 rv_build_from_data(const Scalar& c, const Series1& h, const Series1& g1, const Scalar& lam);

/// Reversers of the form (z2 u(p), z1 v(p)) with u(0) = v(0) = c, one per
/// candidate c for which the equations are solvable.
std::vector<Certificate> rv_find_reversers(const CentElem& f, const std::vector<Scalar>& c_candidates);
std::optional<CentElem> find_reverser_ce(const CentElem& f, const Scalar& c);

struct Classification {
  NormalFormTag tag;
  /// T with T^-1 F T = rv_make_normal_form(tag).
  Map2 conjugator;
};

Classification rv_classify(const Map2& f);

Certificate rv_is_strongly_reversible(const Map2& f);

/// Least j <= bound with Th^j = id.
std::optional<int> rv_reverser_order(const Map2& th, int bound);

}  // namespace frev
