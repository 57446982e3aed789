#pragma once

// Compact elements of the extended centralizer of the diagonal group:
// resonant (z1 phi(p), z2 psi(p)) or inverse (z2 phi(p), z1 psi(p)), p = z1 z2.
// Payloads phi, psi carry truncation N; the matching map truncation is 2N+1
// and one-variable maps such as P(A) carry truncation N+1.

#include "frev/map2.hpp"
#include "frev/series1.hpp"

namespace frev {

enum class Parity { Resonant, Inverse };

struct CentElem {
  Series1 phi;
  Series1 psi;
  Parity parity = Parity::Resonant;

  CentElem() = default;
  CentElem(Series1 phi_, Series1 psi_, Parity parity_);

  FieldSpec field() const { return phi.field(); }
  int trunc() const { return phi.trunc(); }

  static CentElem identity(FieldSpec field, int trunc);
  /// J_c = c (z2, z1).
  static CentElem swap(const Scalar& c, int trunc);
  /// diag(x, y).
  static CentElem diag(const Scalar& x, const Scalar& y, int trunc);

  friend bool operator==(const CentElem& a, const CentElem& b) {
    return a.parity == b.parity && a.phi == b.phi && a.psi == b.psi;
  }
  friend bool operator!=(const CentElem& a, const CentElem& b) { return !(a == b); }
};

/// A o B.
CentElem ce_compose(const CentElem& a, const CentElem& b);
CentElem ce_inverse(const CentElem& a);
CentElem ce_iterate(const CentElem& a, long n);

/// P(A) = t phi psi, truncation N+1.
Series1 ce_P(const CentElem& a);
/// H(chi) = (z1 chi(p)/p, z2); chi has truncation N+1.
CentElem ce_H(const Series1& chi);
/// J H(chi) J = (z1, z2 chi(p)/p).
CentElem ce_H_second(const Series1& chi);
/// Phi(phi) = (z1 phi(p), z2 / phi(p)).
CentElem ce_Phi(const Series1& phi);

enum class SplitForm { HPhi, JHJPhi };

struct Split {
  Series1 chi;
  Series1 unit;
  SplitForm form = SplitForm::HPhi;
};

/// A = H(chi) Phi(unit) or A = JH(chi)J Phi(unit).
Split ce_split(const CentElem& a, SplitForm form);
CentElem ce_unsplit(const Split& s);

/// Commutation test for resonant elements through the coefficient identities
/// phi2 * phi1(rho2) = phi1 * phi2(rho1) and the same for psi.
bool ce_commutes(const CentElem& a, const CentElem& b);

Map2 ce_embed(const CentElem& a);
CentElem ce_extract(const Map2& f);

}  // namespace frev
