#include "frev/sampling.hpp"

#include <algorithm>

namespace frev {

int Sampler::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

mpq_class Sampler::rational(int range) {
  mpq_class q(uniform_int(-range, range), uniform_int(1, 3));
  q.canonicalize();
  return q;
}

Scalar Sampler::scalar(FieldSpec field, bool rational_only, int range) {
  for (;;) {
    std::vector<mpq_class> c(static_cast<std::size_t>(rational_only ? 1 : field.degree()));
    for (auto& q : c) q = rational(range);
    Scalar s(field, std::move(c));
    if (!s.is_zero()) return s;
  }
}

Series1 Sampler::series(FieldSpec field, int trunc, int lo) {
  Series1 s(field, trunc);
  for (int j = std::max(lo, 0); j <= trunc; ++j) s[j] = Scalar(field, rational());
  return s;
}

Series1 Sampler::tangent_id(FieldSpec field, int trunc) {
  Series1 s = series(field, trunc, 2);
  if (trunc >= 1) s[1] = field.one();
  return s;
}

Series1 Sampler::unit(FieldSpec field, int trunc) {
  Series1 s = series(field, trunc, 1);
  s[0] = scalar(field);
  return s;
}

CentElem Sampler::centelem(FieldSpec field, int trunc, Parity parity) {
  return CentElem(unit(field, trunc), unit(field, trunc), parity);
}

Sampler::Shear Sampler::shears(FieldSpec field, int trunc_z, int count) {
  Shear out{Map2::identity(field, trunc_z), Map2::identity(field, trunc_z)};
  const int top = std::max(2, std::min(trunc_z, 4));
  for (int s = 0; s < count; ++s) {
    const int e = uniform_int(2, top);
    const Scalar a = scalar(field);
    Map2 m = Map2::identity(field, trunc_z);
    Map2 mi = Map2::identity(field, trunc_z);
    if (s % 2 == 0) {
      m.comp1.add(0, e, a);
      mi.comp1.add(0, e, -a);
    } else {
      m.comp2.add(e, 0, a);
      mi.comp2.add(e, 0, -a);
    }
    out.map = compose(out.map, m);
    out.inverse = compose(mi, out.inverse);
  }
  return out;
}

}  // namespace frev
