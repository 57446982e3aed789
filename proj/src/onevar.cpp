#include "frev/onevar.hpp"

#include "frev/degree_solver.hpp"

namespace frev {

namespace {

void require_tangent(const Series1& f) {
  if (f.trunc() < 1 || !f[0].is_zero() || !f[1].is_one()) {
    fail(ErrorKind::NotTangentToIdentity, "expected t + O(t^2)");
  }
}

Scalar rational(FieldSpec field, long num, long den) { return field.from_rational(mpq_class(num, den)); }

}  // namespace

Series1 phi_normal_form(const Scalar& mu, int lam, int k, int trunc) {
  const FieldSpec field = mu.field();
  const Series1 base = binomial_series(field.from_int(lam), k, rational(field, -1, k), trunc - 1);
  return times_t(base) * mu;
}

Series1 fk_iterate(int k, const Scalar& alpha, int trunc) {
  const FieldSpec field = alpha.field();
  const Scalar coef = -(field.from_int(k) * alpha);
  return times_t(binomial_series(coef, k, rational(field, -1, k), trunc - 1));
}

Series1 fk(FieldSpec field, int k, int trunc) { return fk_iterate(k, field.one(), trunc); }

Series1 flow(const Series1& v, const Scalar& alpha) {
  if (v.order() < 2) fail(ErrorKind::NotTangentToIdentity, "flow needs a field of order at least two");
  const int n = v.trunc();
  const FieldSpec field = v.field();
  Series1 term = Series1::identity(field, n);
  Series1 sum = term;
  for (int j = 1; j <= n; ++j) {
    term = v * derivative(term).pad(n);
    term *= alpha / field.from_int(j);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

Series1 generator(const Series1& f) {
  require_tangent(f);
  const int n = f.trunc();
  Series1 v(f.field(), n);
  for (int j = 2; j <= n; ++j) {
    const Series1 e = flow(v.truncate(j), f.field().one());
    v[j] += f[j] - e[j];
  }
  return v;
}

Series1 fractional_iterate(const Series1& f, const Scalar& alpha) {
  if (f.is_identity()) return f;
  return flow(generator(f), alpha);
}

TangentIdInvariants tangent_id_invariants(const Series1& f) {
  require_tangent(f);
  if (f.is_identity()) fail(ErrorKind::IdentityInput, "the identity has no residue invariant");
  const int n = f.trunc();
  const FieldSpec field = f.field();
  const Series1 t = Series1::identity(field, n);
  const int k = (f - t).order() - 1;
  if (2 * k + 1 > n) {
    fail(ErrorKind::TruncationTooLow,
         "need degree " + std::to_string(2 * k + 1) + ", have " + std::to_string(n));
  }
  TangentIdInvariants out;
  out.k = k;
  out.a = f[k + 1];

  Series1 w_total = t;
  Series1 g = f;
  for (int j = 2; j <= k; ++j) {
    const int d = k + j;
    Series1 w = t;
    w[j] = field.one();
    const Scalar r1 = compose(comp_inverse(w), compose(g, w))[d];
    const Scalar r0 = g[d];
    const Scalar x = -(r0 / (r1 - r0));
    if (x.is_zero()) continue;
    w[j] = x;
    g = compose(comp_inverse(w), compose(g, w));
    w_total = compose(w_total, w);
  }
  out.c = g[2 * k + 1] / (out.a * out.a);

  const auto roots = field_roots(out.a.inverse(), k);
  if (!roots.empty()) {
    w_total = compose(w_total, t * roots.front());
    out.scaled = true;
  }
  out.conjugator = w_total;
  return out;
}

std::optional<Series1> find_reverser_1d(const Series1& f) {
  const int n = f.trunc();
  const FieldSpec field = f.field();
  const Series1 finv = comp_inverse(f);
  for (const Scalar& beta : roots_of_unity(field)) {
    DegreeProblem pb;
    pb.field = field;
    for (int j = 2; j <= n; ++j) pb.entry_degree.push_back(j);
    pb.first_degree = 1;
    pb.last_degree = n;
    pb.residual = [&](const std::vector<Scalar>& vals, int d) {
      Series1 h(field, d);
      h[1] = beta;
      for (int j = 2; j <= d; ++j) h[j] = vals[static_cast<std::size_t>(j - 2)];
      return std::vector<Series1>{compose(f.truncate(d), h) - compose(h, finv.truncate(d))};
    };
    const DegreeSolution sol = solve_by_degree(pb);
    if (!sol.ok) continue;
    Series1 h(field, n);
    h[1] = beta;
    for (int j = 2; j <= n; ++j) h[j] = sol.values[static_cast<std::size_t>(j - 2)];
    if (compose(f, h) == compose(h, finv)) return h;
  }
  return std::nullopt;
}

Certificate1 s1_is_reversible(const Series1& f) {
  if (f.trunc() < 1 || !f[0].is_zero() || f[1].is_zero()) {
    fail(ErrorKind::NotInvertible, "not an invertible germ fixing 0");
  }
  const FieldSpec field = f.field();
  const int n = f.trunc();
  const Scalar c1 = f[1];
  Certificate1 cert;
  cert.degree = n;
  const Series1 t = Series1::identity(field, n);

  auto attach_witness = [&] {
    cert.witness = find_reverser_1d(f);
    if (!cert.witness) cert.notes.push_back("no reverser with coefficients in this field; verdict from invariants");
  };

  if (c1.is_one()) {
    if (f.is_identity()) {
      cert.verdict = true;
      cert.witness = t;
      cert.notes.push_back("identity");
      return cert;
    }
    const auto inv = tangent_id_invariants(f);
    const Scalar target = rational(field, inv.k + 1, 2);
    cert.verdict = inv.c == target;
    cert.notes.push_back("k=" + std::to_string(inv.k) + " residue " + inv.c.str());
    if (cert.verdict) attach_witness();
    return cert;
  }
  if (c1 == -field.one()) {
    const Series1 g = compose(f, f);
    if (g.is_identity()) {
      cert.verdict = true;
      cert.witness = t;
      cert.notes.push_back("involution");
      return cert;
    }
    const auto inv = tangent_id_invariants(g);
    cert.verdict = inv.k % 2 == 0 && inv.c == rational(field, inv.k + 1, 2);
    cert.notes.push_back("square has k=" + std::to_string(inv.k) + " residue " + inv.c.str());
    if (cert.verdict) attach_witness();
    return cert;
  }
  cert.verdict = false;
  cert.notes.push_back("multiplier " + c1.str() + " is not conjugate to its inverse");
  return cert;
}

Series1 reverser_family(int k, const Scalar& omega, const Scalar& nu, int trunc) {
  const FieldSpec field = omega.field();
  if (omega.pow(k) != -field.one()) fail(ErrorKind::BadOmega, "omega^k must equal -1");
  return times_t(binomial_series(nu, k, rational(field, -1, k), trunc - 1)) * omega;
}

Series1 linearize_finite_order(const Series1& th, int order) {
  if (th.trunc() < 1 || !th[0].is_zero() || th[1].is_zero()) {
    fail(ErrorKind::NotInvertible, "not an invertible germ fixing 0");
  }
  if (order <= 0 || !iterate(th, order).is_identity()) {
    fail(ErrorKind::NotFiniteOrder, "th^" + std::to_string(order) + " is not the identity");
  }
  const FieldSpec field = th.field();
  const Scalar lam_inv = th[1].inverse();
  Series1 power = Series1::identity(field, th.trunc());
  Series1 sum(field, th.trunc());
  Scalar weight = field.one();
  for (int j = 0; j < order; ++j) {
    sum += power * weight;
    power = compose(th, power);
    weight *= lam_inv;
  }
  sum *= field.from_int(order).inverse();
  if (sum * th[1] != compose(sum, th)) fail(ErrorKind::NotFiniteOrder, "averaging did not linearize");
  return sum;
}

DichotomyResult invariance_dichotomy(const Series1& phi, const Series1& rho, int max_order) {
  if (rho.trunc() < 1 || !rho[0].is_zero() || rho[1].is_zero()) fail(ErrorKind::OrderNotOne, "ord(rho) != 1");
  if (compose(phi, rho) != phi) fail(ErrorKind::HypothesisFails, "phi(rho) != phi");
  DichotomyResult out;
  if (phi.is_constant()) return out;
  const auto ord = compositional_order(rho, max_order);
  if (!ord) fail(ErrorKind::HypothesisFails, "phi is not constant but rho has no order within the bound");
  out.branch = DichotomyBranch::FiniteOrder;
  out.order = *ord;
  return out;
}

std::optional<int> compositional_order(const Series1& f, int bound) {
  Series1 cur = f;
  for (int j = 1; j <= bound; ++j) {
    if (cur.is_identity()) return j;
    cur = compose(cur, f);
  }
  return std::nullopt;
}

}  // namespace frev
