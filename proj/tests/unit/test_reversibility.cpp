#include <gtest/gtest.h>

#include "frev/reversibility.hpp"
#include "frev/sampling.hpp"
#include "oracles.hpp"

using namespace frev;
using oracle::rat;
using oracle::ser;

namespace {

NormalFormTag tag_of(NormalKind kind, int k, const Scalar& lam) {
  NormalFormTag t;
  t.kind = kind;
  t.k = k;
  t.lambda = lam;
  return t;
}

Map2 swap_map(const Scalar& c, int trunc_t) { return ce_embed(CentElem::swap(c, trunc_t)); }

template <class Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Parse;
}

// (lam z1 (1+2p)^(-1/2), z2 (1+2p)^(-1/2) / lam).
CentElem sqrt_example(const Scalar& lam, int n) {
  const FieldSpec f = lam.field();
  const Series1 b = binomial_series(f.from_int(2), 1, rat(f, -1, 2), n);
  return CentElem(b * lam, b * lam.inverse(), Parity::Resonant);
}

// (lam z1 (1+p)/(1+2p), z2 / (lam (1+p))).
CentElem rational_example(const Scalar& lam, int n) {
  const FieldSpec f = lam.field();
  const Series1 one_p = ser(f, n, {1, 1});
  return CentElem(divide(one_p, ser(f, n, {1, 2})) * lam, mul_inverse(one_p) * lam.inverse(), Parity::Resonant);
}

Map2 projective_example(FieldSpec f, int n) {
  BiSeries c1(f, n), c2(f, n);
  Scalar sign = f.one();
  for (int d = 0; d < n; ++d) {
    c1.add(d + 1, 0, sign);
    c2.add(d, 1, sign);
    sign = -sign;
  }
  return Map2(c1, c2);
}

}  // namespace

TEST(Reversibility, FirstSeriesCoefficients) {
  const FieldSpec f = FieldSpec::make(1);
  const Map2 m = rv_make_normal_form(tag_of(NormalKind::FirstSeries, 1, f.from_int(2)), 3);
  EXPECT_EQ(m.comp1.get(1, 0), f.from_int(2));
  EXPECT_EQ(m.comp1.get(2, 1), f.from_int(2));
  EXPECT_EQ(m.comp1.terms().size(), 2u);
  EXPECT_EQ(m.comp2.get(0, 1), rat(f, 1, 2));
  EXPECT_EQ(m.comp2.get(1, 2), rat(f, -1, 2));
  EXPECT_EQ(m.comp2.get(2, 3), rat(f, 1, 2));
  EXPECT_EQ(m.comp2.get(3, 4), rat(f, -1, 2));
}

TEST(Reversibility, SecondSeriesPayload) {
  const FieldSpec f = FieldSpec::make(1);
  const CentElem a = normal_form_ce(tag_of(NormalKind::SecondSeries, 1, f.from_int(2)), 6);
  EXPECT_EQ(a.phi, divide(ser(f, 6, {1, 1}), ser(f, 6, {1, 2})) * f.from_int(2));
  EXPECT_EQ(a.psi, mul_inverse(ser(f, 6, {1, 1})) * rat(f, 1, 2));
  EXPECT_EQ(ce_P(a), ser(f, 7, {0, 1, -2, 4, -8, 16, -32, 64}));
}

TEST(Reversibility, SwapsReverseNormalForms) {
  for (int k = 1; k <= 2; ++k) {
    const FieldSpec f = FieldSpec::make(4 * k);
    const Scalar lam = f.from_int(2);
    const int n = 4;
    const Map2 first = rv_make_normal_form(tag_of(NormalKind::FirstSeries, k, lam), n);
    const Map2 second = rv_make_normal_form(tag_of(NormalKind::SecondSeries, k, lam), n);
    for (const Scalar& c : roots_of_unity(f)) {
      const Scalar c2k = c.pow(2 * k);
      const bool rf = rv_verify_reverser(first, swap_map(c, n)).verdict;
      const bool rs = rv_verify_reverser(second, swap_map(c, n)).verdict;
      EXPECT_EQ(rf, c2k.is_one()) << k << " " << c.str();
      EXPECT_EQ(rs, c2k == -f.one()) << k << " " << c.str();
    }
  }
}

TEST(Reversibility, ProjectiveExampleVerification) {
  const FieldSpec f = FieldSpec::make(1);
  const Map2 F = projective_example(f, 9);
  const Map2 nu = Map2::linear(LinearMap2::diag(-f.one(), f.one()), 9);
  const Certificate c = rv_verify_reverser(F, nu);
  EXPECT_TRUE(c.verdict);
  EXPECT_EQ(c.degree, 9);
  EXPECT_FALSE(rv_verify_reverser(F, Map2::identity(f, 9)).verdict);
  EXPECT_EQ(kind_of([&] { rv_classify(F); }), ErrorKind::NotGeneric);
}

TEST(Reversibility, ExplicitSwapReversedMaps) {
  const FieldSpec f = FieldSpec::make(4);
  const Scalar lam = f.from_int(2);
  const Scalar i = f.zeta();
  const int n = 8;
  const Series1 h = fk(f, 1, n + 1);
  const CentElem sq = build_from_data_ce(i, h, Series1::constant(lam * lam, n), lam);
  EXPECT_EQ(sq, sqrt_example(lam, n));
  const CentElem ra = build_from_data_ce(i, h, mul_inverse(ser(f, n, {1, 0, -1})) * (lam * lam), lam);
  EXPECT_EQ(ra, rational_example(lam, n));
  for (const CentElem& a : {sq, ra}) {
    EXPECT_TRUE(rv_verify_reverser(ce_embed(a), swap_map(i, n)).verdict);
    EXPECT_TRUE(ce_reverses(a, CentElem::swap(i, n)));
    EXPECT_FALSE(find_reverser_ce(a, f.one()));
    EXPECT_FALSE(find_reverser_ce(a, -f.one()));
    EXPECT_FALSE(rv_is_strongly_reversible(ce_embed(a)).verdict);
  }
  // g1 = 4 lam^2 / (1 + t) is not admissible data: it is not even.
  EXPECT_EQ(kind_of([&] {
              build_from_data_ce(i, h, mul_inverse(ser(f, n, {1, 1})) * (lam * lam * f.from_int(4)), lam);
            }),
            ErrorKind::BadSymmetry);
  EXPECT_EQ(kind_of([&] { build_from_data_ce(i, h, Series1::constant(lam * lam * f.from_int(4), n), lam); }),
            ErrorKind::BadBranch);
}

TEST(Reversibility, BuildFromDataChecksSymmetry) {
  const int n = 6;
  // c = zeta_8 gives omega = -i, so g1 must be invariant under t -> -i t.
  const FieldSpec e = FieldSpec::make(8);
  const Scalar c = e.zeta();
  EXPECT_EQ(kind_of([&] {
              build_from_data_ce(c, fk(e, 1, n + 1), ser(e, n, {4, 1}), e.from_int(2));
            }),
            ErrorKind::BadSymmetry);
}

TEST(Reversibility, FoundReversersHaveFiniteOrder) {
  for (int k = 1; k <= 2; ++k) {
    const FieldSpec f = FieldSpec::make(4 * k);
    const int n = 4;
    for (NormalKind kind : {NormalKind::FirstSeries, NormalKind::SecondSeries}) {
      const CentElem a = normal_form_ce(tag_of(kind, k, f.from_int(2)), n);
      const auto certs = rv_find_reversers(a, roots_of_unity(f));
      EXPECT_FALSE(certs.empty());
      for (const Certificate& c : certs) {
        ASSERT_TRUE(c.witness);
        EXPECT_TRUE(rv_verify_reverser(ce_embed(a), *c.witness).verdict);
        const auto ord = rv_reverser_order(*c.witness, 4 * k);
        ASSERT_TRUE(ord);
        EXPECT_LE(*ord, 4 * k);
      }
    }
  }
}

TEST(Reversibility, StrongReversibility) {
  const FieldSpec f = FieldSpec::make(4);
  for (int k = 1; k <= 2; ++k) {
    const Map2 first = rv_make_normal_form(tag_of(NormalKind::FirstSeries, k, f.from_int(2)), 4);
    const Certificate a = rv_is_strongly_reversible(first);
    ASSERT_TRUE(a.verdict);
    ASSERT_TRUE(a.witness);
    EXPECT_TRUE(compose(*a.witness, *a.witness).is_identity());
    EXPECT_TRUE(rv_verify_reverser(first, *a.witness).verdict);
  }
  const FieldSpec e = FieldSpec::make(8);
  const Map2 second = rv_make_normal_form(tag_of(NormalKind::SecondSeries, 2, e.from_int(2)), 5);
  const Certificate b = rv_is_strongly_reversible(second);
  EXPECT_FALSE(b.verdict);
  EXPECT_EQ(b.tag, "second_series");
}

TEST(Reversibility, ClassifyConjugatedNormalForms) {
  Sampler s(113);
  const FieldSpec f = FieldSpec::make(4);
  const Scalar lam = f.from_int(2);
  for (NormalKind kind : {NormalKind::Linear, NormalKind::FirstSeries, NormalKind::SecondSeries}) {
    for (int k = 1; k <= 2; ++k) {
      const NormalFormTag tag = tag_of(kind, kind == NormalKind::Linear ? 0 : k, lam);
      const Map2 nf = rv_make_normal_form(tag, 2 * k + 1);
      const auto sh = s.shears(f, nf.trunc(), 3);
      const Map2 F = compose(sh.inverse, compose(nf, sh.map));
      if (kind == NormalKind::SecondSeries && k == 2) continue;  // scaling needs a fourth root of -1/2
      const Classification cl = rv_classify(F);
      EXPECT_EQ(cl.tag.kind, kind);
      EXPECT_EQ(cl.tag.k, tag.k);
      EXPECT_EQ(compose(F, cl.conjugator), compose(cl.conjugator, rv_make_normal_form(cl.tag, 2 * k + 1)));
    }
  }
}

TEST(Reversibility, ClassifyPolynomialRepresentative) {
  for (int k = 1; k <= 2; ++k) {
    const FieldSpec f = FieldSpec::make(8);
    const Map2 F = rv_polynomial_rep(k, f.from_int(2), 2 * k + 1);
    const Classification cl = rv_classify(F);
    EXPECT_EQ(cl.tag.kind, NormalKind::SecondSeries);
    EXPECT_EQ(cl.tag.k, k);
  }
}

TEST(Reversibility, ClassifyRejections) {
  const FieldSpec f = FieldSpec::make(4);
  EXPECT_EQ(kind_of([&] { rv_classify(Map2::linear(LinearMap2::diag(f.from_int(2), f.from_int(3)), 5)); }),
            ErrorKind::NotReversible);
  // rho = t + t^2 has residue 0.
  const Series1 phi = Series1::constant(f.from_int(2), 3);
  const Series1 psi = ser(f, 3, {1, 1}) * rat(f, 1, 2);
  EXPECT_EQ(kind_of([&] { rv_classify(ce_embed(CentElem(phi, psi, Parity::Resonant))); }), ErrorKind::NotReversible);
  EXPECT_EQ(kind_of([&] { rv_classify(Map2::identity(f, 4)); }), ErrorKind::NotResonantShape);
}

TEST(Reversibility, MoserForm) {
  const FieldSpec f = FieldSpec::make(4);
  const CentElem a = moser_form_ce(1, f.from_int(2), Series1::identity(f, 5));
  EXPECT_TRUE(ce_P(a).is_identity());
  const Classification cl = rv_classify(ce_embed(a));
  EXPECT_EQ(cl.tag.kind, NormalKind::FirstSeries);
  EXPECT_EQ(cl.tag.k, 1);
  EXPECT_TRUE(rv_is_strongly_reversible(ce_embed(a)).verdict);
}

TEST(Reversibility, ReverserOrder) {
  const FieldSpec f = FieldSpec::make(4);
  EXPECT_EQ(rv_reverser_order(swap_map(f.one(), 3), 10), 2);
  EXPECT_EQ(rv_reverser_order(swap_map(f.zeta(), 3), 10), 4);
  EXPECT_FALSE(rv_reverser_order(Map2::linear(LinearMap2::diag(f.from_int(2), f.one()), 7), 10));
}
