#pragma once

// Seeded generators for test data and the CLI's randomized conjugators.

#include <cstdint>
#include <random>

#include "frev/centralizer.hpp"
#include "frev/map2.hpp"
#include "frev/series1.hpp"

namespace frev {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform_int(int lo, int hi);
  /// Rational with numerator in [-range, range] and denominator in 1..3.
  mpq_class rational(int range = 3);
  /// Nonzero scalar; uses every basis coefficient unless `rational_only`.
  Scalar scalar(FieldSpec field, bool rational_only = true, int range = 3);
  /// Random coefficients in degrees lo..trunc, zero below.
  Series1 series(FieldSpec field, int trunc, int lo);
  Series1 tangent_id(FieldSpec field, int trunc);
  Series1 unit(FieldSpec field, int trunc);
  CentElem centelem(FieldSpec field, int trunc, Parity parity);

  /// Product of `count` shears (z1 + a z2^j, z2), (z1, z2 + b z1^i) with
  /// i, j >= 2; `inverse` is exact.
  struct Shear {
    Map2 map;
    Map2 inverse;
  };
  Shear shears(FieldSpec field, int trunc_z, int count);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace frev
