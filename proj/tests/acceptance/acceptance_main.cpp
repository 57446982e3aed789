// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
// throughout. Exits 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "frev/factorization.hpp"
#include "frev/normalization.hpp"
#include "frev/onevar.hpp"
#include "frev/reversibility.hpp"
#include "frev/sampling.hpp"
#include "oracles.hpp"

using namespace frev;
using oracle::rat;
using oracle::ser;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail << "first failure: " << what << "; ";
    pass = false;
  }
};

NormalFormTag tag_of(NormalKind kind, int k, const Scalar& lam) {
  NormalFormTag t;
  t.kind = kind;
  t.k = k;
  t.lambda = lam;
  return t;
}

Scalar imag_unit(FieldSpec f) { return f.zeta().pow(f.m() / 4); }

std::vector<Scalar> roots_with_power(FieldSpec f, int e, const Scalar& target) {
  std::vector<Scalar> out;
  for (const Scalar& w : roots_of_unity(f)) {
    if (w.pow(e) == target) out.push_back(w);
  }
  return out;
}

bool reverses_1d(const Series1& f, const Series1& h) {
  return compose(comp_inverse(h), compose(f, h)) == comp_inverse(f);
}

Map2 swap_map(const Scalar& c, int trunc_t) { return ce_embed(CentElem::swap(c, trunc_t)); }

// F o T == T o NF at the conjugator's truncation.
bool conjugates(const Map2& f, const Map2& t, const Map2& nf) { return compose(f, t) == compose(t, nf); }

// 1. phi_{1,1,k} and the reverser family.
void c01(Outcome& o) {
  const FieldSpec f = FieldSpec::make(12);
  const int n = 12;
  Sampler s(101);
  int checked = 0;
  for (int k = 1; k <= 3; ++k) {
    const Series1 phi = phi_normal_form(f.one(), 1, k, n);
    const auto omegas = roots_with_power(f, k, -f.one());
    o.check(static_cast<int>(omegas.size()) == k, "expected k roots of -1 for k=" + std::to_string(k));
    for (int trial = 0; trial < 3; ++trial) {
      const Scalar nu(f, s.rational());
      for (const Scalar& w : omegas) {
        const Series1 h = reverser_family(k, w, nu, n);
        o.check(reverses_1d(phi, h), "h_{omega,nu} fails to reverse at k=" + std::to_string(k));
        const auto ord = compositional_order(h, 2 * k);
        o.check(ord && (2 * k) % *ord == 0, "reverser order does not divide 2k at k=" + std::to_string(k));
        ++checked;
      }
    }
  }
  o.detail << checked << " reversers checked at N_t=" << n;
}

// 2. Swaps J_c reverse the first and second series.
void c02(Outcome& o) {
  const int n = 8;
  int checked = 0;
  for (int k = 1; k <= 3; ++k) {
    const FieldSpec f = FieldSpec::make(4 * k);
    const Scalar i = imag_unit(f);
    const Scalar lam2 = (f.from_int(3) + f.from_int(4) * i) * rat(f, 1, 5);
    for (const Scalar& lam : {f.from_int(2), lam2}) {
      const Map2 first = rv_make_normal_form(tag_of(NormalKind::FirstSeries, k, lam), n);
      const Map2 second = rv_make_normal_form(tag_of(NormalKind::SecondSeries, k, lam), n);
      o.check(first.trunc() == 17, "N_z != 17");
      for (const Scalar& c : roots_with_power(f, 2 * k, f.one())) {
        o.check(rv_verify_reverser(first, swap_map(c, n)).verdict, "J_c misses first series, k=" + std::to_string(k));
        ++checked;
      }
      for (const Scalar& c : roots_with_power(f, 2 * k, -f.one())) {
        o.check(rv_verify_reverser(second, swap_map(c, n)).verdict, "J_c misses second series, k=" + std::to_string(k));
        ++checked;
      }
    }
  }
  o.detail << checked << " swap reversals verified at N_z=17";
}

// 3. Strong reversibility splits the two series.
void c03(Outcome& o) {
  const FieldSpec f = FieldSpec::make(8);
  const int n = 6;
  for (int k = 1; k <= 2; ++k) {
    const Map2 first = rv_make_normal_form(tag_of(NormalKind::FirstSeries, k, f.from_int(2)), n);
    const Certificate a = rv_is_strongly_reversible(first);
    o.check(a.verdict && a.witness, "first series not strongly reversible, k=" + std::to_string(k));
    if (a.witness) {
      o.check(compose(*a.witness, *a.witness).is_identity(), "witness is not an involution");
      o.check(rv_verify_reverser(first, *a.witness).verdict, "witness does not reverse");
    }
    const Map2 second = rv_make_normal_form(tag_of(NormalKind::SecondSeries, k, f.from_int(2)), n);
    o.check(!rv_is_strongly_reversible(second).verdict, "second series reported strongly reversible");
  }
  o.detail << "k=1,2 over Q(zeta_8), lambda=2";
}

// 4. Reversers of normal forms have finite order at most 4k.
void c04(Outcome& o) {
  const int n = 6;
  int found = 0;
  int max_order = 0;
  for (int k = 1; k <= 2; ++k) {
    const FieldSpec f = FieldSpec::make(4 * k);
    for (NormalKind kind : {NormalKind::FirstSeries, NormalKind::SecondSeries}) {
      const CentElem a = normal_form_ce(tag_of(kind, k, f.from_int(2)), n);
      const auto certs = rv_find_reversers(a, roots_of_unity(f));
      o.check(!certs.empty(), "no reverser found for " + kind_name(kind) + " k=" + std::to_string(k));
      for (const Certificate& c : certs) {
        o.check(c.witness && rv_verify_reverser(ce_embed(a), *c.witness).verdict, "found reverser fails");
        if (!c.witness) continue;
        const auto ord = rv_reverser_order(*c.witness, 4 * k);
        o.check(ord.has_value(), "reverser order exceeds 4k for k=" + std::to_string(k));
        if (ord) max_order = std::max(max_order, *ord);
        ++found;
      }
    }
  }
  o.detail << found << " reversers, largest order " << max_order;
}

// 5. Classification of seeded shear conjugates.
void c05(Outcome& o) {
  Sampler s(505);
  int total = 0;
  int wrong = 0;
  for (int k = 1; k <= 3; ++k) {
    const FieldSpec f = FieldSpec::make(4 * k);
    const int n = 2 * k + 1;
    for (NormalKind kind : {NormalKind::Linear, NormalKind::FirstSeries, NormalKind::SecondSeries}) {
      if (kind == NormalKind::Linear && k > 1) continue;
      const NormalFormTag tag = tag_of(kind, kind == NormalKind::Linear ? 0 : k, f.from_int(2));
      const Map2 nf = rv_make_normal_form(tag, n);
      for (int trial = 0; trial < 20; ++trial) {
        const auto sh = s.shears(f, nf.trunc(), 3);
        const Map2 F = compose(sh.inverse, compose(nf, sh.map));
        ++total;
        std::string why;
        try {
          const Classification cl = rv_classify(F);
          if (cl.tag.kind != tag.kind || cl.tag.k != tag.k) {
            why = "got " + kind_name(cl.tag.kind) + " k=" + std::to_string(cl.tag.k);
          } else if (!conjugates(F, cl.conjugator, rv_make_normal_form(cl.tag, n))) {
            why = "conjugator fails";
          }
        } catch (const Error& e) {
          why = e.what();
        }
        if (!why.empty()) {
          if (wrong == 0) o.check(false, kind_name(kind) + " k=" + std::to_string(k) + ": " + why);
          ++wrong;
        }
      }
    }
  }
  o.detail << wrong << " misclassified of " << total;
}

// 6. The polynomial representative is a second-series map.
void c06(Outcome& o) {
  const FieldSpec f = FieldSpec::make(8);
  for (int k = 1; k <= 2; ++k) {
    const int n = 2 * k + 2;
    const Map2 F = rv_polynomial_rep(k, f.from_int(2), n);
    const Classification cl = rv_classify(F);
    o.check(cl.tag.kind == NormalKind::SecondSeries && cl.tag.k == k, "wrong class for k=" + std::to_string(k));
    o.check(conjugates(F, cl.conjugator, rv_make_normal_form(cl.tag, n)), "conjugator fails");
  }
  o.detail << "k=1,2 over Q(zeta_8), lambda=2";
}

// 7. Closed-form iterates of f_k against the generator flow; additivity.
void c07(Outcome& o) {
  const FieldSpec f = FieldSpec::make(1);
  const int n = 16;
  const std::vector<Scalar> alphas{f.from_int(-1), rat(f, 1, 2), rat(f, 1, 3), f.from_int(2)};
  for (int k = 1; k <= 3; ++k) {
    const Series1 v = generator(fk(f, k, n));
    for (const Scalar& a : alphas) {
      o.check(fk_iterate(k, a, n) == flow(v, a), "flow mismatch at k=" + std::to_string(k) + " alpha=" + a.str());
    }
  }
  Sampler s(707);
  for (int trial = 0; trial < 10; ++trial) {
    const Series1 g = s.tangent_id(f, n);
    const Scalar a(f, s.rational());
    const Scalar b(f, s.rational());
    o.check(compose(fractional_iterate(g, a), fractional_iterate(g, b)) == fractional_iterate(g, a + b),
            "additivity fails for alpha=" + a.str() + " beta=" + b.str());
  }
  o.detail << "12 closed-form iterates and 10 additivity pairs at N_t=16";
}

// 8. Averaging linearizes finite-order elements.
void c08(Outcome& o) {
  Sampler s(808);
  const FieldSpec f = FieldSpec::make(12);
  const auto roots = roots_of_unity(f);
  for (int trial = 0; trial < 5; ++trial) {
    const Scalar c = roots[static_cast<std::size_t>(s.uniform_int(0, static_cast<int>(roots.size()) - 1))];
    const Map2 j = swap_map(c, 3);
    const auto sh = s.shears(f, j.trunc(), 2);
    const Map2 th = compose(sh.inverse, compose(j, sh.map));
    const int order = *rv_reverser_order(th, 64);
    const Map2 h = linearize_finite_order(th, order);
    o.check(apply_linear(linear_part(th), h) == compose(h, th), "2D averaging fails");
  }
  for (int trial = 0; trial < 5; ++trial) {
    Scalar w = roots[static_cast<std::size_t>(s.uniform_int(0, static_cast<int>(roots.size()) - 1))];
    if (w.is_one()) w = -w;
    const Series1 g = s.tangent_id(f, 8);
    const Series1 th = compose(comp_inverse(g), compose(Series1::identity(f, 8) * w, g));
    const Series1 h = linearize_finite_order(th, unity_order_of(w));
    o.check(h * w == compose(h, th), "1D averaging fails");
  }
  o.detail << "5 conjugated swaps and 5 conjugated rotations";
}

// 9. P is a homomorphism and pi F = P(F) pi.
void c09(Outcome& o) {
  Sampler s(909);
  const FieldSpec f = FieldSpec::make(4);
  const int n = 5;
  for (int trial = 0; trial < 50; ++trial) {
    const Parity pa = trial % 2 == 0 ? Parity::Resonant : Parity::Inverse;
    const Parity pb = (trial / 2) % 2 == 0 ? Parity::Resonant : Parity::Inverse;
    const CentElem a = s.centelem(f, n, pa);
    const CentElem b = s.centelem(f, n, pb);
    o.check(ce_P(ce_compose(a, b)) == compose(ce_P(a), ce_P(b)), "P(AB) != P(A) P(B)");
    const Map2 fa = ce_embed(a);
    BiSeries lifted(f, fa.trunc());
    const Series1 rho = ce_P(a);
    for (int j = 0; j <= rho.trunc() && 2 * j <= fa.trunc(); ++j) lifted.add(j, j, rho[j]);
    o.check(mul_trunc(fa.comp1, fa.comp2, fa.trunc()) == lifted, "semi-conjugacy fails");
  }
  o.detail << "50 pairs across both parities";
}

// 10. The square-root and rational examples.
void c10(Outcome& o) {
  const FieldSpec f = FieldSpec::make(4);
  const Scalar lam = f.from_int(2);
  const Scalar i = f.zeta();
  const int n = 8;
  const Series1 b = binomial_series(f.from_int(2), 1, rat(f, -1, 2), n);
  const CentElem sq(b * lam, b * lam.inverse(), Parity::Resonant);
  const Series1 one_p = ser(f, n, {1, 1});
  const CentElem ra(divide(one_p, ser(f, n, {1, 2})) * lam, mul_inverse(one_p) * lam.inverse(), Parity::Resonant);
  const CentElem sq_built = build_from_data_ce(i, fk(f, 1, n + 1), Series1::constant(lam * lam, n), lam);
  const CentElem ra_built = build_from_data_ce(i, fk(f, 1, n + 1), mul_inverse(ser(f, n, {1, 0, -1})) * (lam * lam), lam);
  o.check(sq_built == sq, "square-root example differs from its data construction");
  o.check(ra_built == ra, "rational example differs from its data construction");
  for (const CentElem& a : {sq, ra}) {
    const Map2 F = ce_embed(a);
    o.check(F.trunc() == 17, "N_z != 17");
    o.check(rv_verify_reverser(F, swap_map(i, n)).verdict, "J_i does not reverse");
    o.check(!find_reverser_ce(a, f.one()) && !find_reverser_ce(a, -f.one()), "an involutive reverser was found");
    o.check(!rv_is_strongly_reversible(F).verdict, "reported strongly reversible");
  }
  o.detail << "both maps at N_z=17; no reverser with c = +1 or -1";
}

// 11. The projective example: verified reverser, refused by the classifier.
void c11(Outcome& o) {
  const FieldSpec f = FieldSpec::make(1);
  const int nz = 9;
  BiSeries c1(f, nz), c2(f, nz);
  Scalar sign = f.one();
  for (int d = 0; d < nz; ++d) {
    c1.add(d + 1, 0, sign);
    c2.add(d, 1, sign);
    sign = -sign;
  }
  const Map2 F(c1, c2);
  const Map2 nu = Map2::linear(LinearMap2::diag(-f.one(), f.one()), nz);
  o.check(rv_verify_reverser(F, nu).verdict, "diag(-1, 1) does not reverse");
  bool refused = false;
  try {
    rv_classify(F);
  } catch (const Error& e) {
    refused = e.kind() == ErrorKind::NotGeneric;
  }
  o.check(refused, "classifier did not raise NotGeneric");
  o.detail << "verified at N_z=9; classifier raises NotGeneric";
}

// F = S^-1 E(diag H(chi) Phi(u)) S, followed by nu when det is -1.
Map2 factor_input(Sampler& s, FieldSpec f, int n, const Series1& chi, bool flip) {
  const std::vector<long> lams{2, 3, -2, 5};
  const Scalar lam = f.from_int(lams[static_cast<std::size_t>(s.uniform_int(0, 3))]);
  CentElem g = ce_compose(CentElem::diag(lam, lam.inverse(), n), ce_compose(ce_H(chi), ce_Phi(s.unit(f, n))));
  const Map2 e = ce_embed(g);
  const auto sh = s.shears(f, e.trunc(), 2);
  Map2 F = compose(sh.inverse, compose(e, sh.map));
  if (flip) F = compose(F, Map2::linear(LinearMap2::diag(-f.one(), f.one()), e.trunc()));
  return F;
}

// 12. Factorization into reversibles.
void c12(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  Sampler s(1212);
  const FieldSpec f = FieldSpec::make(4);
  const int n = 4;
  int ok = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const Series1 chi = fk_iterate(1, Scalar(f, s.rational()), n + 1);
    const Map2 F = factor_input(s, f, n, chi, trial % 2 == 1);
    try {
      const FactorBundle b = fz_factor(F);
      o.check(fz_verify(b, F), "bundle does not verify");
      ++ok;
    } catch (const Error& e) {
      o.check(false, std::string("fz_factor raised ") + e.what());
    }
  }
  int general = 0;
  int search_failed = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const Map2 F = factor_input(s, f, n, s.tangent_id(f, n + 1), trial % 2 == 1);
    ++general;
    try {
      const FactorBundle b = fz_factor(F);
      o.check(fz_verify(b, F), "general bundle does not verify");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SubfactorizationFailed && e.kind() != ErrorKind::SearchFailed) throw;
      ++search_failed;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.check(secs <= 300.0, "runtime cap exceeded");
  o.detail << ok << "/10 f_1-type inputs factored; general chi: " << search_failed << "/" << general
           << " search failures; " << secs << " s";
}

// 13. Kernels against independent oracles.
void c13(Outcome& o) {
  Sampler s(1313);
  const FieldSpec f = FieldSpec::make(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Parity pa = trial % 2 == 0 ? Parity::Resonant : Parity::Inverse;
    const Parity pb = (trial / 2) % 2 == 0 ? Parity::Resonant : Parity::Inverse;
    const CentElem a = s.centelem(f, 4, pa);
    const CentElem b = s.centelem(f, 4, pb);
    o.check(ce_embed(ce_compose(a, b)) == compose(ce_embed(a), ce_embed(b)), "ce_compose disagrees with compose");
    o.check(ce_embed(a) == oracle::embed_naive(a), "embedding disagrees with the termwise oracle");
  }
  for (int trial = 0; trial < 50; ++trial) {
    const Series1 g = s.series(f, 10, 1);
    const Series1 h = s.series(f, 10, 0);
    o.check(compose(h, g) == oracle::compose_naive(h, g), "Series1 compose disagrees with the naive oracle");
  }
  o.detail << "100 centralizer pairs, 50 series pairs at N_t=10";
}

// 14. The Moser form with w = t.
void c14(Outcome& o) {
  const FieldSpec f = FieldSpec::make(4);
  const CentElem a = moser_form_ce(1, f.from_int(2), Series1::identity(f, 5));
  const Classification cl = rv_classify(ce_embed(a));
  o.check(cl.tag.kind == NormalKind::FirstSeries && cl.tag.k == 1,
          "classified as " + kind_name(cl.tag.kind) + " k=" + std::to_string(cl.tag.k));
  o.detail << "sigma=1, lambda=2";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"reverser family of phi_{1,1,k}", c01},
      {"swaps reverse both series", c02},
      {"strong reversibility", c03},
      {"finite order of reversers", c04},
      {"classification of conjugates", c05},
      {"polynomial representative", c06},
      {"flows of f_k", c07},
      {"averaging linearizes", c08},
      {"P homomorphism and semi-conjugacy", c09},
      {"square-root and rational examples", c10},
      {"projective example", c11},
      {"factorization", c12},
      {"oracle equivalence", c13},
      {"Moser form", c14},
  };
  int failed = 0;
  for (std::size_t idx = 0; idx < criteria.size(); ++idx) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[idx].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", idx + 1, criteria[idx].first.c_str(),
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
