#include "frev/centralizer.hpp"

namespace frev {

CentElem::CentElem(Series1 phi_, Series1 psi_, Parity parity_)
    : phi(std::move(phi_)), psi(std::move(psi_)), parity(parity_) {
  check_trunc(phi, psi);
  if (phi[0].is_zero() || psi[0].is_zero()) fail(ErrorKind::NotUnit, "payloads must be units");
}

CentElem CentElem::identity(FieldSpec field, int trunc) {
  const Series1 one = Series1::constant(field.one(), trunc);
  return CentElem(one, one, Parity::Resonant);
}

CentElem CentElem::swap(const Scalar& c, int trunc) {
  const Series1 s = Series1::constant(c, trunc);
  return CentElem(s, s, Parity::Inverse);
}

CentElem CentElem::diag(const Scalar& x, const Scalar& y, int trunc) {
  return CentElem(Series1::constant(x, trunc), Series1::constant(y, trunc), Parity::Resonant);
}

Series1 ce_P(const CentElem& a) { return times_t(a.phi * a.psi); }

CentElem ce_compose(const CentElem& a, const CentElem& b) {
  check_trunc(a.phi, b.phi);
  const int n = a.trunc();
  const Series1 rho2 = ce_P(b).truncate(n);
  const Series1 phi1 = compose(a.phi, rho2);
  const Series1 psi1 = compose(a.psi, rho2);
  const Parity parity = a.parity == b.parity ? Parity::Resonant : Parity::Inverse;
  if (a.parity == Parity::Inverse) return CentElem(b.psi * phi1, b.phi * psi1, parity);
  return CentElem(b.phi * phi1, b.psi * psi1, parity);
}

CentElem ce_inverse(const CentElem& a) {
  const int n = a.trunc();
  const Series1 rinv = comp_inverse(ce_P(a)).truncate(n);
  const Series1 u = mul_inverse(compose(a.phi, rinv));
  const Series1 v = mul_inverse(compose(a.psi, rinv));
  if (a.parity == Parity::Inverse) return CentElem(v, u, Parity::Inverse);
  return CentElem(u, v, Parity::Resonant);
}

CentElem ce_iterate(const CentElem& a, long n) {
  if (n < 0) return ce_iterate(ce_inverse(a), -n);
  CentElem result = CentElem::identity(a.field(), a.trunc());
  CentElem base = a;
  while (n > 0) {
    if (n & 1) result = ce_compose(result, base);
    n >>= 1;
    if (n > 0) base = ce_compose(base, base);
  }
  return result;
}

namespace {

Series1 chi_over_t(const Series1& chi) {
  if (chi.trunc() < 1 || !chi[0].is_zero() || chi[1].is_zero()) fail(ErrorKind::OrderNotOne, "ord(chi) != 1");
  return div_t(chi);
}

}  // namespace

CentElem ce_H(const Series1& chi) {
  const Series1 q = chi_over_t(chi);
  return CentElem(q, Series1::constant(chi.field().one(), q.trunc()), Parity::Resonant);
}

CentElem ce_H_second(const Series1& chi) {
  const Series1 q = chi_over_t(chi);
  return CentElem(Series1::constant(chi.field().one(), q.trunc()), q, Parity::Resonant);
}

CentElem ce_Phi(const Series1& phi) {
  if (phi[0].is_zero()) fail(ErrorKind::NotUnit, "Phi needs a unit");
  return CentElem(phi, mul_inverse(phi), Parity::Resonant);
}

Split ce_split(const CentElem& a, SplitForm form) {
  if (a.parity != Parity::Resonant) fail(ErrorKind::WrongParity, "split needs a resonant element");
  Split s;
  s.chi = ce_P(a);
  s.form = form;
  s.unit = form == SplitForm::HPhi ? mul_inverse(a.psi) : a.phi;
  return s;
}

CentElem ce_unsplit(const Split& s) {
  const CentElem h = s.form == SplitForm::HPhi ? ce_H(s.chi) : ce_H_second(s.chi);
  return ce_compose(h, ce_Phi(s.unit));
}

bool ce_commutes(const CentElem& a, const CentElem& b) {
  if (a.parity != Parity::Resonant || b.parity != Parity::Resonant) {
    fail(ErrorKind::WrongParity, "commutation identities apply to resonant elements");
  }
  check_trunc(a.phi, b.phi);
  const int n = a.trunc();
  const Series1 rho1 = ce_P(a).truncate(n);
  const Series1 rho2 = ce_P(b).truncate(n);
  return b.phi * compose(a.phi, rho2) == a.phi * compose(b.phi, rho1) &&
         b.psi * compose(a.psi, rho2) == a.psi * compose(b.psi, rho1);
}

Map2 ce_embed(const CentElem& a) {
  const int n = a.trunc();
  const int nz = 2 * n + 1;
  BiSeries c1(a.field(), nz);
  BiSeries c2(a.field(), nz);
  const bool res = a.parity == Parity::Resonant;
  for (int j = 0; j <= n; ++j) {
    if (res) {
      c1.add(j + 1, j, a.phi[j]);
      c2.add(j, j + 1, a.psi[j]);
    } else {
      c1.add(j, j + 1, a.phi[j]);
      c2.add(j + 1, j, a.psi[j]);
    }
  }
  return Map2(std::move(c1), std::move(c2));
}

CentElem ce_extract(const Map2& f) {
  const int nz = f.trunc();
  if (nz % 2 == 0) fail(ErrorKind::NotResonantShape, "total-degree truncation must be odd");
  const int n = (nz - 1) / 2;
  const bool res = is_resonant(f);
  if (!res && !is_inverse_resonant(f)) fail(ErrorKind::NotResonantShape, "monomials outside z_i p^j shapes");
  Series1 phi(f.field(), n);
  Series1 psi(f.field(), n);
  for (int j = 0; j <= n; ++j) {
    phi[j] = res ? f.comp1.get(j + 1, j) : f.comp1.get(j, j + 1);
    psi[j] = res ? f.comp2.get(j, j + 1) : f.comp2.get(j + 1, j);
  }
  if (phi[0].is_zero() || psi[0].is_zero()) fail(ErrorKind::NotResonantShape, "payload is not a unit");
  return CentElem(std::move(phi), std::move(psi), res ? Parity::Resonant : Parity::Inverse);
}

}  // namespace frev
