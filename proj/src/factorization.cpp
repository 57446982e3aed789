#include "frev/factorization.hpp"

#include "frev/centralizer.hpp"
#include "frev/normalization.hpp"
#include "frev/onevar.hpp"
#include "frev/reversibility.hpp"

namespace frev {

std::string role_name(FactorRole role) { return role == FactorRole::Reversible ? "reversible" : "involution"; }

namespace {

Series1 reverser_or_fail(const Series1& r, const std::string& label) {
  const auto h = find_reverser_1d(r);
  if (!h) {
    fail(ErrorKind::SearchFailed,
         "no reverser for " + label + " at truncation " + std::to_string(r.trunc()) + ": " + r.str());
  }
  return *h;
}

}  // namespace

TwoReversibles fz_two_reversibles_1d(const Series1& chi) {
  const FieldSpec field = chi.field();
  const int n = chi.trunc();
  if (n < 1 || !chi[0].is_zero() || !chi[1].is_one()) {
    fail(ErrorKind::NotTangentToIdentity, "chi must be t + O(t^2)");
  }
  if (chi.is_identity()) {
    const Series1 t = Series1::identity(field, n);
    return {t, t, t, t};
  }
  // Past the truncation the residue is unconstrained; read it as (k+1)/2.
  std::optional<TangentIdInvariants> inv;
  try {
    inv = tangent_id_invariants(chi);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TruncationTooLow) throw;
  }
  TwoReversibles out;
  if (!inv || inv->c == Scalar(field, mpq_class(inv->k + 1, 2))) {
    // Reversible already: split it as two equal half-iterates.
    out.r1 = fractional_iterate(chi, Scalar(field, mpq_class(1, 2)));
    out.r2 = out.r1;
    out.h1 = reverser_or_fail(out.r1, "the half-iterate");
    out.h2 = out.h1;
  } else {
    // A = f_{2k}^x moves the residue of A^-1 o chi to (k+1)/2.
    const Scalar x = inv->a * inv->a * (inv->c - Scalar(field, mpq_class(inv->k + 1, 2)));
    out.r1 = fk_iterate(2 * inv->k, x, n);
    out.r2 = compose(comp_inverse(out.r1), chi);
    out.h1 = reverser_or_fail(out.r1, "the correcting flow");
    out.h2 = reverser_or_fail(out.r2, "the corrected factor");
  }
  if (compose(out.r1, out.r2) != chi) fail(ErrorKind::SearchFailed, "recomposition check failed");
  return out;
}

namespace {

struct Twist {
  /// s0^-1 L s0 is upper triangular.
  LinearMap2 s0;
  Scalar mu;
  Scalar lambda;
  Scalar lambda_inv;
};

std::optional<LinearMap2> triangular_basis(const LinearMap2& l) {
  const FieldSpec field = l.a.field();
  const Scalar disc = l.trace() * l.trace() - l.det() * field.from_int(4);
  const Scalar half(field, mpq_class(1, 2));
  if (!disc.is_zero()) {
    const auto roots = field_roots(disc, 2);
    if (roots.empty()) return std::nullopt;
    return eigenbasis(l, (l.trace() + roots.front()) * half, (l.trace() - roots.front()) * half);
  }
  const Scalar e = l.trace() * half;
  const LinearMap2 nil{l.a - e, l.b, l.c, l.d - e};
  if (nil.a.is_zero() && nil.b.is_zero() && nil.c.is_zero() && nil.d.is_zero()) return LinearMap2::identity(field);
  // Columns (nil w, w) with nil w != 0.
  if (!nil.a.is_zero() || !nil.c.is_zero()) return LinearMap2{nil.a, field.one(), nil.c, field.zero()};
  return LinearMap2{nil.b, field.zero(), nil.d, field.one()};
}

std::optional<Twist> choose_twist(const LinearMap2& l) {
  const FieldSpec field = l.a.field();
  const auto s0 = triangular_basis(l);
  if (!s0) return std::nullopt;
  const LinearMap2 j0 = s0->inverse() * l * *s0;
  std::vector<mpq_class> cands;
  for (int p = 2; p <= 12; ++p) {
    for (int sign : {1, -1}) {
      cands.emplace_back(sign * p);
      cands.emplace_back(sign, p);
    }
  }
  for (const mpq_class& q : cands) {
    const Scalar mu(field, q);
    const Scalar l1 = j0.a * mu;
    const Scalar l2 = j0.d * mu.inverse();
    if (l1 == l2 || unity_order_of(l1) != 0) continue;
    return Twist{*s0, mu, l1, l2};
  }
  return std::nullopt;
}

// Witness for an already reversible map through its normal form.
std::optional<Map2> shortcut_witness(const Map2& f) {
  Classification cl;
  try {
    cl = rv_classify(f);
  } catch (const Error&) {
    return std::nullopt;
  }
  const FieldSpec field = f.field();
  Scalar c = field.one();
  if (cl.tag.kind == NormalKind::SecondSeries) {
    const auto roots = field_roots(-field.one(), 2 * cl.tag.k);
    if (roots.empty()) return std::nullopt;
    c = roots.front();
  }
  const Map2 j = ce_embed(CentElem::swap(c, (f.trunc() - 1) / 2));
  const Map2 w = compose(cl.conjugator, compose(j, inverse(cl.conjugator)));
  if (!rv_verify_reverser(f, w).verdict) return std::nullopt;
  return w;
}

void push_factor(FactorBundle& b, Factor f) {
  if (!f.map.is_identity()) b.factors.push_back(std::move(f));
}

}  // namespace

FactorBundle fz_factor(const Map2& f) {
  const FieldSpec field = f.field();
  const int nz = f.trunc();
  if (nz % 2 == 0) fail(ErrorKind::NotResonantShape, "total-degree truncation must be odd");
  const int n = (nz - 1) / 2;
  const Scalar det = linear_part(f).det();
  if (det != field.one() && det != -field.one()) fail(ErrorKind::BadDeterminant, "det L(F) = " + det.str());

  FactorBundle bundle;
  bundle.degree = nz;
  const Map2 nu = Map2::linear(LinearMap2::diag(-field.one(), field.one()), nz);
  const bool flip = det != field.one();
  const Map2 fp = flip ? compose(f, nu) : f;

  if (const auto w = shortcut_witness(fp)) {
    push_factor(bundle, {fp, FactorRole::Reversible, *w});
    bundle.notes.push_back("already reversible");
  } else {
    const auto tw = choose_twist(linear_part(fp));
    if (!tw) fail(ErrorKind::SubfactorizationFailed, "eigenvalues of the linear part lie outside the field");
    const LinearMap2 lam_t = LinearMap2::diag(tw->mu, tw->mu.inverse());
    const Map2 s0 = Map2::linear(tw->s0, nz);
    const Map2 s0_inv = Map2::linear(tw->s0.inverse(), nz);
    const Map2 ft = compose(s0_inv, compose(fp, compose(s0, Map2::linear(lam_t, nz))));
    const LinearMap2 s = eigenbasis(linear_part(ft), tw->lambda, tw->lambda_inv);
    const Map2 sm = Map2::linear(s, nz);
    const PDResult pd = pd_normalize(apply_linear(s.inverse(), compose(ft, sm)));
    const Map2 t = compose(s0, compose(sm, pd.K));
    const Map2 t_inv = inverse(t);
    auto pull = [&](const CentElem& a) { return compose(t, compose(ce_embed(a), t_inv)); };

    const Split sp = ce_split(pd.G, SplitForm::HPhi);
    TwoReversibles tr;
    try {
      tr = fz_two_reversibles_1d(sp.chi);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SearchFailed) throw;
      fail(ErrorKind::SubfactorizationFailed, e.what());
    }
    push_factor(bundle, {pull(ce_H(tr.r1)), FactorRole::Reversible, pull(ce_H(tr.h1))});
    push_factor(bundle, {pull(ce_H(tr.r2)), FactorRole::Reversible, pull(ce_H(tr.h2))});
    push_factor(bundle, {pull(ce_Phi(sp.unit)), FactorRole::Reversible, pull(CentElem::swap(field.one(), n))});
    const LinearMap2 swap{field.zero(), field.one(), field.one(), field.zero()};
    push_factor(bundle, {Map2::linear(tw->s0 * lam_t.inverse() * tw->s0.inverse(), nz), FactorRole::Reversible,
                         Map2::linear(tw->s0 * swap * tw->s0.inverse(), nz)});
    bundle.notes.push_back("twist mu = " + tw->mu.str());
  }
  if (flip) push_factor(bundle, {nu, FactorRole::Involution, std::nullopt});
  if (!fz_verify(bundle, f)) fail(ErrorKind::SubfactorizationFailed, "bundle does not verify");
  return bundle;
}

bool fz_verify(const FactorBundle& bundle, const Map2& f) {
  try {
    if (bundle.degree != f.trunc()) return false;
    Map2 prod = Map2::identity(f.field(), f.trunc());
    for (const Factor& fac : bundle.factors) {
      if (fac.role == FactorRole::Involution) {
        if (!compose(fac.map, fac.map).is_identity()) return false;
      } else if (!fac.witness || !rv_verify_reverser(fac.map, *fac.witness).verdict) {
        return false;
      }
      prod = compose(prod, fac.map);
    }
    return prod == f;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace frev
