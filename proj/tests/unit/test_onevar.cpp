#include <gtest/gtest.h>

#include "frev/onevar.hpp"
#include "frev/sampling.hpp"
#include "oracles.hpp"

using namespace frev;
using oracle::rat;
using oracle::ser;

namespace {

bool reverses(const Series1& h, const Series1& f) {
  return compose(comp_inverse(h), compose(f, h)) == comp_inverse(f);
}

Series1 geometric(FieldSpec f, int n, long a) {
  Series1 s(f, n);
  Scalar p = f.one();
  for (int j = 1; j <= n; ++j) {
    s[j] = p;
    p *= f.from_int(a);
  }
  return s;
}

}  // namespace

TEST(OneVar, FkClosedForms) {
  const FieldSpec f = FieldSpec::make(1);
  EXPECT_EQ(fk(f, 1, 8), geometric(f, 8, 1));
  EXPECT_EQ(fk_iterate(1, f.from_int(2), 8), geometric(f, 8, 2));
  EXPECT_EQ(fk(f, 2, 6), ser(f, 6, {0, 1, 0, 1, 0, mpq_class(3, 2), 0}));
  EXPECT_EQ(phi_normal_form(f.one(), 1, 1, 8), geometric(f, 8, -1));
}

TEST(OneVar, PhiPowerRelation) {
  // (phi_{1,1,k}(t))^k = phi_{1,1,1}(t^k).
  const FieldSpec f = FieldSpec::make(1);
  const int n = 12;
  for (int k = 1; k <= 4; ++k) {
    const Series1 lhs = pow(phi_normal_form(f.one(), 1, k, n), k);
    const Series1 rhs = compose(phi_normal_form(f.one(), 1, 1, n), Series1::monomial(f.one(), k, n));
    EXPECT_EQ(lhs, rhs) << k;
  }
}

TEST(OneVar, GeneratorOfFkIsMonomial) {
  const FieldSpec f = FieldSpec::make(1);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(generator(fk(f, k, 10)), Series1::monomial(f.one(), k + 1, 10)) << k;
  }
  EXPECT_EQ(flow(Series1::monomial(f.one(), 2, 6), rat(f, 1, 2)),
            ser(f, 6, {0, 1, mpq_class(1, 2), mpq_class(1, 4), mpq_class(1, 8), mpq_class(1, 16), mpq_class(1, 32)}));
}

TEST(OneVar, FlowAdditivityOnSamples) {
  Sampler s(17);
  const FieldSpec f = FieldSpec::make(1);
  for (int trial = 0; trial < 8; ++trial) {
    const Series1 g = s.tangent_id(f, 8);
    const Series1 v = generator(g);
    const Scalar a(f, s.rational()), b(f, s.rational());
    EXPECT_EQ(compose(flow(v, a), flow(v, b)), flow(v, a + b));
    EXPECT_EQ(flow(v, f.one()), g);
    EXPECT_EQ(fractional_iterate(g, f.from_int(2)), compose(g, g));
  }
}

TEST(OneVar, Invariants) {
  const FieldSpec f = FieldSpec::make(1);
  auto inv = tangent_id_invariants(fk(f, 1, 8));
  EXPECT_EQ(inv.k, 1);
  EXPECT_EQ(inv.c, f.one());
  inv = tangent_id_invariants(ser(f, 8, {0, 1, 1}));
  EXPECT_EQ(inv.k, 1);
  EXPECT_TRUE(inv.c.is_zero());
  inv = tangent_id_invariants(fk(f, 2, 8));
  EXPECT_EQ(inv.k, 2);
  EXPECT_EQ(inv.c, rat(f, 3, 2));
  // f_k^alpha keeps c = (k+1)/2 for any alpha.
  for (int k = 1; k <= 3; ++k) {
    inv = tangent_id_invariants(fk_iterate(k, rat(f, -3, 7), 2 * k + 3));
    EXPECT_EQ(inv.c, rat(f, k + 1, 2)) << k;
  }
}

TEST(OneVar, InvariantsAreConjugacyInvariant) {
  Sampler s(23);
  const FieldSpec f = FieldSpec::make(1);
  for (int trial = 0; trial < 12; ++trial) {
    Series1 g = s.tangent_id(f, 9);
    if (g[2].is_zero()) g[2] = f.one();
    const Series1 w = s.tangent_id(f, 9);
    const auto a = tangent_id_invariants(g);
    const auto b = tangent_id_invariants(compose(comp_inverse(w), compose(g, w)));
    EXPECT_EQ(a.k, b.k);
    EXPECT_EQ(a.c, b.c);
    EXPECT_EQ(s1_is_reversible(g).verdict, s1_is_reversible(compose(comp_inverse(w), compose(g, w))).verdict);
  }
}

TEST(OneVar, InvariantErrors) {
  const FieldSpec f = FieldSpec::make(1);
  EXPECT_THROW(tangent_id_invariants(Series1::identity(f, 6)), Error);
  try {
    tangent_id_invariants(ser(f, 4, {0, 1, 0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TruncationTooLow);
  }
}

TEST(OneVar, ReversibilityVerdicts) {
  const FieldSpec q = FieldSpec::make(1);
  auto c = s1_is_reversible(ser(q, 9, {0, 1, -1, 1, -1, 1, -1, 1, -1, 1}));
  ASSERT_TRUE(c.verdict);
  ASSERT_TRUE(c.witness);
  EXPECT_TRUE(reverses(*c.witness, geometric(q, 9, -1)));
  EXPECT_EQ((*c.witness)[1], -q.one());

  EXPECT_FALSE(s1_is_reversible(ser(q, 9, {0, 1, 1})).verdict);
  EXPECT_TRUE(s1_is_reversible(ser(q, 9, {0, -1})).verdict);
  EXPECT_FALSE(s1_is_reversible(ser(q, 9, {0, 2, 1})).verdict);

  const FieldSpec g = FieldSpec::make(4);
  c = s1_is_reversible(fk(g, 2, 9));
  ASSERT_TRUE(c.verdict);
  EXPECT_TRUE(reverses(*c.witness, fk(g, 2, 9)));
}

TEST(OneVar, ReverserFamilyReversesPhi) {
  const FieldSpec f = FieldSpec::make(12);
  const int n = 12;
  for (int k = 1; k <= 3; ++k) {
    const Series1 phi = phi_normal_form(f.one(), 1, k, n);
    int seen = 0;
    for (const Scalar& w : roots_of_unity(f)) {
      if (w.pow(k) != -f.one()) continue;
      ++seen;
      for (long nu : {0L, 1L, -2L}) {
        const Series1 h = reverser_family(k, w, f.from_int(nu), n);
        EXPECT_TRUE(reverses(h, phi)) << k << " " << w.str() << " " << nu;
        const auto ord = compositional_order(h, 4 * k);
        ASSERT_TRUE(ord) << k;
        EXPECT_EQ((2 * k) % *ord, 0);
      }
    }
    EXPECT_EQ(seen, k);
  }
}

TEST(OneVar, ReverserFamilyExamples) {
  const FieldSpec q = FieldSpec::make(1);
  EXPECT_EQ(reverser_family(1, -q.one(), q.zero(), 5), ser(q, 5, {0, -1}));
  const Series1 h = reverser_family(1, -q.one(), q.one(), 6);
  EXPECT_EQ(h, ser(q, 6, {0, -1, 1, -1, 1, -1, 1}));
  EXPECT_TRUE(compose(h, h).is_identity());
  const FieldSpec g = FieldSpec::make(4);
  EXPECT_EQ(compositional_order(reverser_family(2, g.zeta(), g.zero(), 6), 8), 4);
  try {
    reverser_family(2, -g.one(), g.zero(), 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadOmega);
  }
}

TEST(OneVar, LinearizeFiniteOrder) {
  const FieldSpec q = FieldSpec::make(1);
  const Series1 th = ser(q, 6, {0, -1, 1, -1, 1, -1, 1});
  const Series1 h = linearize_finite_order(th, 2);
  EXPECT_EQ(h, ser(q, 6, {0, 1, mpq_class(-1, 2), mpq_class(1, 2), mpq_class(-1, 2), mpq_class(1, 2), mpq_class(-1, 2)}));
  EXPECT_EQ(compose(comp_inverse(h), compose(ser(q, 6, {0, -1}), h)), th);
  EXPECT_EQ(linearize_finite_order(ser(q, 6, {0, -1}), 2), Series1::identity(q, 6));
  try {
    linearize_finite_order(ser(q, 6, {0, -1, 1}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotFiniteOrder);
  }
}

TEST(OneVar, InvarianceDichotomy) {
  const FieldSpec q = FieldSpec::make(1);
  auto r = invariance_dichotomy(ser(q, 6, {1, 0, 1}), ser(q, 6, {0, -1}), 8);
  EXPECT_EQ(r.branch, DichotomyBranch::FiniteOrder);
  EXPECT_EQ(r.order, 2);
  r = invariance_dichotomy(ser(q, 6, {3}), geometric(q, 6, 1), 8);
  EXPECT_EQ(r.branch, DichotomyBranch::Constant);
  const FieldSpec c3 = FieldSpec::make(3);
  r = invariance_dichotomy(ser(c3, 6, {1, 0, 0, 1}), Series1::monomial(c3.zeta(), 1, 6), 8);
  EXPECT_EQ(r.branch, DichotomyBranch::FiniteOrder);
  EXPECT_EQ(r.order, 3);
  try {
    invariance_dichotomy(ser(q, 6, {1, 1}), ser(q, 6, {0, -1}), 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisFails);
  }
}
