#pragma once

// Products of reversible maps: the one-variable two-factor step and the
// factorization of maps with det L = +-1.

#include <optional>
#include <string>
#include <vector>

#include "frev/map2.hpp"
#include "frev/series1.hpp"

namespace frev {

enum class FactorRole { Reversible, Involution };

std::string role_name(FactorRole role);

struct Factor {
  Map2 map;
  FactorRole role = FactorRole::Reversible;
  /// Reverser of `map` when the role is Reversible.
  std::optional<Map2> witness;
};

/// F = factors[0] o factors[1] o ... up to total degree `degree`.
struct FactorBundle {
  std::vector<Factor> factors;
  int degree = 0;
  std::vector<std::string> notes;
};

struct TwoReversibles {
  Series1 r1;
  Series1 r2;
  /// h_i with h_i^-1 r_i h_i = r_i^-1.
  Series1 h1;
  Series1 h2;
};

/// chi = r1 o r2 with both factors reversible; chi tangent to the identity.
TwoReversibles fz_two_reversibles_1d(const Series1& chi);

FactorBundle fz_factor(const Map2& f);

bool fz_verify(const FactorBundle& bundle, const Map2& f);

}  // namespace frev
