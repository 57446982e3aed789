#include "frev/reversibility.hpp"

#include "frev/degree_solver.hpp"

namespace frev {

std::string kind_name(NormalKind kind) {
  switch (kind) {
    case NormalKind::Linear: return "linear";
    case NormalKind::FirstSeries: return "first_series";
    case NormalKind::SecondSeries: return "second_series";
  }
  return "linear";
}

NormalKind parse_kind(const std::string& name) {
  if (name == "linear") return NormalKind::Linear;
  if (name == "first_series" || name == "first") return NormalKind::FirstSeries;
  if (name == "second_series" || name == "second") return NormalKind::SecondSeries;
  fail(ErrorKind::Parse, "unknown normal form kind '" + name + "'");
}

namespace {

Scalar q(FieldSpec field, long num, long den) { return field.from_rational(mpq_class(num, den)); }

// 1 + a t^k.
Series1 one_plus(const Scalar& a, int k, int n) {
  Series1 s = Series1::constant(a.field().one(), n);
  if (k <= n) s[k] += a;
  return s;
}

}  // namespace

CentElem normal_form_ce(const NormalFormTag& tag, int n) {
  const Scalar& lam = tag.lambda;
  const FieldSpec field = lam.field();
  const int k = tag.k;
  if (tag.kind == NormalKind::Linear) return CentElem::diag(lam, lam.inverse(), n);
  if (k < 1) fail(ErrorKind::BadShape, "k must be positive");
  if (tag.kind == NormalKind::FirstSeries) {
    const Series1 phi = one_plus(field.one(), k, n) * lam;
    return CentElem(phi, mul_inverse(phi), Parity::Resonant);
  }
  const Series1 a = binomial_series(field.one(), k, q(field, 1, k), n);
  const Series1 b = binomial_series(field.from_int(2), k, q(field, -1, k), n);
  const Series1 c = binomial_series(field.one(), k, q(field, -1, k), n);
  return CentElem(a * b * lam, c * lam.inverse(), Parity::Resonant);
}

Map2 rv_make_normal_form(const NormalFormTag& tag, int trunc_t) { return ce_embed(normal_form_ce(tag, trunc_t)); }

CentElem polynomial_rep_ce(int k, const Scalar& lam, int n) {
  const FieldSpec field = lam.field();
  Series1 psi = one_plus(field.one(), k, n);
  if (2 * k <= n) psi[2 * k] += field.from_int(2 * k + 1);
  return CentElem(one_plus(field.one(), k, n) * lam, psi * lam.inverse(), Parity::Resonant);
}

Map2 rv_polynomial_rep(int k, const Scalar& lam, int trunc_t) { return ce_embed(polynomial_rep_ce(k, lam, trunc_t)); }

CentElem moser_form_ce(int sigma, const Scalar& lam, const Series1& w) {
  const Series1 e = exp_series(w);
  const Scalar s = lam.field().from_int(sigma);
  return CentElem(e * (s * lam), mul_inverse(e) * (s * lam.inverse()), Parity::Resonant);
}

Certificate rv_verify_reverser(const Map2& f, const Map2& th) {
  if (linear_part(th).det().is_zero()) fail(ErrorKind::NotInvertible, "reverser candidate is not invertible");
  Certificate cert;
  cert.degree = f.trunc();
  cert.verdict = compose(compose(f, th), f) == th;
  cert.witness = th;
  cert.notes.push_back(cert.verdict ? "F Th F = Th" : "F Th F != Th");
  return cert;
}

bool ce_reverses(const CentElem& f, const CentElem& th) { return ce_compose(ce_compose(f, th), f) == th; }

CentElem build_from_data_ce(const Scalar& c, const Series1& h, const Series1& g1, const Scalar& lam) {
  const FieldSpec field = c.field();
  const int n = g1.trunc();
  if (h.trunc() != n + 1) fail(ErrorKind::TruncMismatch, "h must carry truncation one above g1");
  const Scalar omega = c.pow(-2);
  const int order = unity_order_of(omega * omega);
  if (order == 0) fail(ErrorKind::BadSymmetry, "c is not a root of unity");
  const Scalar w2 = omega * omega;
  const Series1 t = Series1::identity(field, n + 1);
  if (compose(h, t * w2) != h * w2) fail(ErrorKind::BadSymmetry, "h(omega^2 t) != omega^2 h(t)");
  if (compose(g1, Series1::identity(field, n) * omega) != g1) fail(ErrorKind::BadSymmetry, "g1(omega t) != g1(t)");
  if (g1[0] != lam * lam) fail(ErrorKind::BadBranch, "g1(0) must equal lambda^2");

  const Series1 hinv = comp_inverse(h);
  const Series1 rho = compose(h, hinv * omega) * omega.inverse();
  const Series1 g = compose(g1, hinv.truncate(n));
  const Series1 r = div_t(rho);
  const Series1 phi = nth_root_unit(r * g, 2, lam);
  const Series1 psi = nth_root_unit(r * mul_inverse(g), 2, lam.inverse());
  CentElem f(phi, psi, Parity::Resonant);
  if (!ce_reverses(f, CentElem::swap(c, n))) fail(ErrorKind::BadSymmetry, "J_c does not reverse the result");
  return f;
}

Map2 rv_build_from_data(const Scalar& c, const Series1& h, const Series1& g1, const Scalar& lam) {
  return ce_embed(build_from_data_ce(c, h, g1, lam));
}

std::optional<CentElem> find_reverser_ce(const CentElem& f, const Scalar& c) {
  const int n = f.trunc();
  const FieldSpec field = f.field();
  auto build = [&](const std::vector<Scalar>& vals, int d) {
    Series1 u = Series1::constant(c, d);
    Series1 v = Series1::constant(c, d);
    for (int j = 1; j <= d; ++j) {
      u[j] = vals[static_cast<std::size_t>(2 * (j - 1))];
      v[j] = vals[static_cast<std::size_t>(2 * (j - 1) + 1)];
    }
    return CentElem(u, v, Parity::Inverse);
  };
  DegreeProblem pb;
  pb.field = field;
  for (int j = 1; j <= n; ++j) {
    pb.entry_degree.push_back(j);
    pb.entry_degree.push_back(j);
  }
  pb.first_degree = 0;
  pb.last_degree = n;
  pb.residual = [&](const std::vector<Scalar>& vals, int d) {
    const CentElem th = build(vals, d);
    const CentElem fd(f.phi.truncate(d), f.psi.truncate(d), f.parity);
    const CentElem r = ce_compose(ce_compose(fd, th), fd);
    return std::vector<Series1>{r.phi - th.phi, r.psi - th.psi};
  };
  const DegreeSolution sol = solve_by_degree(pb);
  if (!sol.ok) return std::nullopt;
  CentElem th = build(sol.values, n);
  if (!ce_reverses(f, th)) return std::nullopt;
  return th;
}

std::vector<Certificate> rv_find_reversers(const CentElem& f, const std::vector<Scalar>& c_candidates) {
  if (f.parity != Parity::Resonant) fail(ErrorKind::WrongParity, "reverser search needs a resonant map");
  const Scalar lam = f.phi[0];
  if (!(lam * f.psi[0]).is_one() || lam * lam == f.field().one()) {
    fail(ErrorKind::BadLinearPart, "linear part must be diag(lambda, 1/lambda) with lambda != +-1");
  }
  std::vector<Certificate> out;
  const Map2 fm = ce_embed(f);
  for (const Scalar& c : c_candidates) {
    const auto th = find_reverser_ce(f, c);
    if (!th) continue;
    Certificate cert = rv_verify_reverser(fm, ce_embed(*th));
    if (!cert.verdict) continue;
    cert.tag = "c=" + c.str();
    out.push_back(std::move(cert));
  }
  return out;
}

std::optional<int> rv_reverser_order(const Map2& th, int bound) {
  Map2 cur = th;
  for (int j = 1; j <= bound; ++j) {
    if (cur.is_identity()) return j;
    cur = compose(cur, th);
  }
  return std::nullopt;
}

namespace {

struct ResonantClass {
  NormalFormTag tag;
  /// C with C^-1 G C = normal form.
  CentElem conj;
};

bool ce_conjugates(const CentElem& g, const CentElem& c, const CentElem& nf) {
  return ce_compose(g, c) == ce_compose(c, nf);
}

ResonantClass classify_resonant(const CentElem& g, const Scalar& lam) {
  const FieldSpec field = lam.field();
  const int n = g.trunc();
  const Series1 rho = ce_P(g);
  ResonantClass out;
  out.tag.lambda = lam;

  if (rho.is_identity()) {
    const Series1 u = g.phi * lam.inverse() - Series1::constant(field.one(), n);
    if (u.is_zero()) {
      out.tag.kind = NormalKind::Linear;
      out.conj = CentElem::identity(field, n);
      return out;
    }
    const int k = u.order();
    out.tag.kind = NormalKind::FirstSeries;
    out.tag.k = k;
    // chi = w^-1 with w = t (u / t^k)^(1/k), so that u(chi(t)) = t^k.
    Series1 shifted(field, n - k);
    for (int j = 0; j <= n - k; ++j) shifted[j] = u[j + k];
    const auto roots = field_roots(shifted[0], k);
    if (roots.empty()) fail(ErrorKind::RootNotInField, "no k-th root of the leading coefficient of phi");
    const Series1 w = times_t(nth_root_unit(shifted, k, roots.front())).pad(n + 1);
    out.conj = ce_H_second(comp_inverse(w));
    if (!ce_conjugates(g, out.conj, normal_form_ce(out.tag, n))) {
      fail(ErrorKind::NotReversible, "phi does not reduce to 1 + t^k");
    }
    return out;
  }

  const auto inv = tangent_id_invariants(rho);
  const int k = inv.k;
  if (inv.c != q(field, k + 1, 2)) {
    fail(ErrorKind::NotReversible, "P(F) has residue " + inv.c.str() + ", not (k+1)/2");
  }
  out.tag.kind = NormalKind::SecondSeries;
  out.tag.k = k;
  const CentElem nf = normal_form_ce(out.tag, n);
  const Series1 rho_nf = ce_P(nf);
  const auto scalings = field_roots(q(field, -2, k) / inv.a, k);
  if (scalings.empty()) fail(ErrorKind::RootNotInField, "no scaling brings P(F) to the normal form");
  for (const Scalar& s : scalings) {
    const CentElem d = CentElem::diag(s, field.one(), n);
    const CentElem g1 = ce_compose(ce_inverse(d), ce_compose(g, d));
    const auto chi = conjugate_1d(ce_P(g1), rho_nf, field.one());
    if (!chi) continue;
    const CentElem k2 = ce_H_second(*chi);
    const CentElem g2 = ce_compose(ce_inverse(k2), ce_compose(g1, k2));
    Series1 phi1;
    try {
      phi1 = solve_phi1_functional(divide(nf.phi, g2.phi), rho_nf, k);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BadShape) throw;
      continue;
    }
    const CentElem c = ce_compose(d, ce_compose(k2, ce_Phi(phi1)));
    if (ce_conjugates(g, c, nf)) {
      out.conj = c;
      return out;
    }
  }
  fail(ErrorKind::NotReversible, "the t^k coefficient of phi rules out the second-series normal form");
}

}  // namespace

Classification rv_classify(const Map2& f) {
  const FieldSpec field = f.field();
  const int nz = f.trunc();
  if (nz % 2 == 0) fail(ErrorKind::NotResonantShape, "total-degree truncation must be odd");
  const LinearMap2 l = linear_part(f);
  const Scalar det = l.det();
  if (det.is_zero()) fail(ErrorKind::Singular, "linear part is singular");
  const Scalar disc = l.trace() * l.trace() - det * field.from_int(4);
  const auto roots = field_roots(disc, 2);
  if (roots.empty()) fail(ErrorKind::RootNotInField, "eigenvalues of the linear part lie outside the field");
  const Scalar half = q(field, 1, 2);
  Scalar l1 = (l.trace() + roots.front()) * half;
  Scalar l2 = (l.trace() - roots.front()) * half;
  if (l.b.is_zero() && l.c.is_zero() && l1 != l.a) std::swap(l1, l2);
  if (unity_order_of(l1) != 0 || unity_order_of(l2) != 0) {
    fail(ErrorKind::NotGeneric, "an eigenvalue of the linear part is a root of unity");
  }
  if (!(l1 * l2).is_one()) fail(ErrorKind::NotReversible, "eigenvalues do not pair as lambda, 1/lambda");

  std::optional<Error> last;
  for (int pass = 0; pass < 2; ++pass) {
    const Scalar& lam = pass == 0 ? l1 : l2;
    const Scalar& mu = pass == 0 ? l2 : l1;
    const LinearMap2 s = eigenbasis(l, lam, mu);
    const Map2 sm = Map2::linear(s, nz);
    const Map2 f1 = apply_linear(s.inverse(), compose(f, sm));
    try {
      const PDResult pd = pd_normalize(f1);
      const ResonantClass rc = classify_resonant(pd.G, lam);
      const Map2 t = compose(sm, compose(pd.K, ce_embed(rc.conj)));
      const Map2 nf = rv_make_normal_form(rc.tag, (nz - 1) / 2);
      if (compose(f, t) != compose(t, nf)) fail(ErrorKind::NotReversible, "conjugator check failed");
      return {rc.tag, t};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::RootNotInField && e.kind() != ErrorKind::NotReversible) throw;
      last = e;
    }
  }
  throw *last;
}

Certificate rv_is_strongly_reversible(const Map2& f) {
  const Classification cl = rv_classify(f);
  Certificate cert;
  cert.degree = f.trunc();
  cert.tag = kind_name(cl.tag.kind);
  cert.conjugator = cl.conjugator;
  const FieldSpec field = f.field();
  if (cl.tag.kind == NormalKind::SecondSeries) {
    const Series1 rho = ce_P(normal_form_ce(cl.tag, (f.trunc() - 1) / 2));
    cert.verdict = false;
    const bool refuted = !compose(rho, rho).is_identity();
    cert.notes.push_back(refuted ? "P(F) o P(F) != id; an involutive reverser has P = id and cannot reverse P(F)"
                                 : "P(F) o P(F) = id at this truncation; refutation inconclusive");
    return cert;
  }
  const Map2 j = ce_embed(CentElem::swap(field.one(), (f.trunc() - 1) / 2));
  const Map2 w = compose(cl.conjugator, compose(j, inverse(cl.conjugator)));
  if (!compose(w, w).is_identity()) fail(ErrorKind::NotReversible, "conjugated swap is not an involution");
  if (!rv_verify_reverser(f, w).verdict) fail(ErrorKind::NotReversible, "conjugated swap does not reverse F");
  cert.verdict = true;
  cert.witness = w;
  cert.notes.push_back("involution T J T^-1 reverses F");
  return cert;
}

}  // namespace frev
