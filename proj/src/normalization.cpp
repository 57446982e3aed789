#include "frev/normalization.hpp"

#include "frev/degree_solver.hpp"

namespace frev {

PDResult pd_normalize(const Map2& f) {
  const int n = f.trunc();
  const FieldSpec field = f.field();
  const LinearMap2 l = linear_part(f);
  if (!l.b.is_zero() || !l.c.is_zero() || !(l.a * l.d).is_one()) {
    fail(ErrorKind::BadLinearPart, "linear part must be diag(lambda, 1/lambda)");
  }
  const Scalar lam = l.a;
  Scalar pw = lam;
  for (int j = 1; j <= 4 * n; ++j) {
    if (pw.is_one()) {
      fail(ErrorKind::BadLinearPart, "lambda is a root of unity of order " + std::to_string(j));
    }
    pw *= lam;
  }
  const Scalar lam_inv = lam.inverse();

  // lam^e for e in [-n, n].
  std::vector<Scalar> lam_pow(static_cast<std::size_t>(2 * n + 1), field.one());
  for (int e = 1; e <= n; ++e) {
    lam_pow[static_cast<std::size_t>(n + e)] = lam_pow[static_cast<std::size_t>(n + e - 1)] * lam;
    lam_pow[static_cast<std::size_t>(n - e)] = lam_pow[static_cast<std::size_t>(n - e + 1)] * lam_inv;
  }
  auto lam_to = [&](int e) { return lam_pow[static_cast<std::size_t>(n + e)]; };

  Map2 k = Map2::identity(field, n);
  Map2 g = Map2::linear(l, n);
  for (int d = 2; d <= n; ++d) {
    const Map2 fk = compose(f.truncate(d), k.truncate(d));
    const Map2 kg = compose(k.truncate(d), g.truncate(d));
    const BiSeries r1 = (fk.comp1 - kg.comp1).homog(d);
    const BiSeries r2 = (fk.comp2 - kg.comp2).homog(d);
    for (int comp = 0; comp < 2; ++comp) {
      const BiSeries& r = comp == 0 ? r1 : r2;
      const Scalar& lam_i = comp == 0 ? lam : lam_inv;
      BiSeries& kc = comp == 0 ? k.comp1 : k.comp2;
      BiSeries& gc = comp == 0 ? g.comp1 : g.comp2;
      for (const auto& t : r.terms()) {
        const bool resonant = comp == 0 ? t.i == t.j + 1 : t.j == t.i + 1;
        if (resonant) {
          gc.add(t.i, t.j, t.c);
          continue;
        }
        const Scalar div = lam_to(t.i - t.j) - lam_i;
        if (div.is_zero()) {
          fail(ErrorKind::ZeroDivisorEncountered,
               "small divisor vanishes at z1^" + std::to_string(t.i) + " z2^" + std::to_string(t.j));
        }
        kc.add(t.i, t.j, t.c / div);
      }
    }
  }
  if (compose(f, k) != compose(k, g)) fail(ErrorKind::ZeroDivisorEncountered, "normalization check failed");
  PDResult out;
  out.K = std::move(k);
  out.G = ce_extract(g);
  out.degree = n;
  return out;
}

std::optional<Series1> conjugate_1d(const Series1& f, const Series1& g, const Scalar& beta) {
  check_trunc(f, g);
  const int n = f.trunc();
  const FieldSpec field = f.field();
  DegreeProblem pb;
  pb.field = field;
  for (int j = 2; j <= n; ++j) pb.entry_degree.push_back(j);
  pb.first_degree = 1;
  pb.last_degree = n;
  auto build = [&](const std::vector<Scalar>& vals, int d) {
    Series1 w(field, d);
    w[1] = beta;
    for (int j = 2; j <= d; ++j) w[j] = vals[static_cast<std::size_t>(j - 2)];
    return w;
  };
  pb.residual = [&](const std::vector<Scalar>& vals, int d) {
    const Series1 w = build(vals, d);
    return std::vector<Series1>{compose(f.truncate(d), w) - compose(w, g.truncate(d))};
  };
  const DegreeSolution sol = solve_by_degree(pb);
  if (!sol.ok) return std::nullopt;
  const Series1 w = build(sol.values, n);
  if (compose(f, w) != compose(w, g)) return std::nullopt;
  return w;
}

RhoToFk pd_conjugate_rho_to_fk(const Series1& rho) {
  const auto inv = tangent_id_invariants(rho);
  const FieldSpec field = rho.field();
  if (inv.c != field.from_rational(mpq_class(inv.k + 1, 2))) {
    fail(ErrorKind::NotReversibleClass, "residue " + inv.c.str() + " differs from (k+1)/2");
  }
  const auto betas = field_roots(inv.a.inverse(), inv.k);
  if (betas.empty()) fail(ErrorKind::RootNotInField, "no k-th root of the leading coefficient");
  const Series1 target = fk(field, inv.k, rho.trunc());
  for (const Scalar& beta : betas) {
    if (auto chi = conjugate_1d(rho, target, beta)) return {*chi, inv.k};
  }
  fail(ErrorKind::NotReversibleClass, "no conjugator to f_k at this truncation");
}

Series1 solve_phi1_functional(const Series1& target, const Series1& rho_in, int k) {
  const int n = target.trunc();
  const FieldSpec field = target.field();
  if (!target[0].is_one()) fail(ErrorKind::BadShape, "target must start with 1");
  for (int j = 1; j <= k && j <= n; ++j) {
    if (!target[j].is_zero()) fail(ErrorKind::BadShape, "target has a term of degree " + std::to_string(j));
  }
  if (rho_in.trunc() < n) fail(ErrorKind::TruncMismatch, "rho truncation below the target's");
  const Series1 rho = rho_in.truncate(n);
  if (k + 1 > n) return Series1::constant(field.one(), n);
  if (!rho[0].is_zero() || !rho[1].is_one() || (rho - Series1::identity(field, n)).order() != k + 1) {
    fail(ErrorKind::BadShape, "rho must be t + a t^(k+1) + ... with a != 0");
  }
  const Scalar a_rho = rho[k + 1];
  Series1 phi1 = Series1::constant(field.one(), n);
  auto residual = [&] { return phi1 - target * compose(phi1, rho); };
  for (int d = 1; d + k <= n; ++d) {
    const Scalar r0 = residual()[d + k];
    if (!r0.is_zero()) phi1[d] = r0 / (field.from_int(d) * a_rho);
  }
  if (!residual().is_zero()) fail(ErrorKind::BadShape, "functional equation has no solution at this truncation");
  return phi1;
}

}  // namespace frev
