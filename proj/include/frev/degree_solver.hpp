#pragma once

// Degree-by-degree solver for equations that are triangular in the unknowns:
// an unknown enters the residual affinely at some first degree and only
// nonlinearly above it. Unknowns whose column vanishes at their entry degree
// stay open and are carried to the next degree.

#include <functional>
#include <string>
#include <vector>

#include "frev/linsolve.hpp"
#include "frev/series1.hpp"

namespace frev {

struct DegreeProblem {
  FieldSpec field;
  /// Degree at which each unknown is first considered.
  std::vector<int> entry_degree;
  /// Residual series for the given unknown values; only coefficients at
  /// degree `d` are read, so implementations may truncate at `d`.
  std::function<std::vector<Series1>(const std::vector<Scalar>& values, int d)> residual;
  int first_degree = 1;
  int last_degree = 1;
  /// Initial values; defaults to zero.
  std::vector<Scalar> start;
};

struct DegreeSolution {
  bool ok = false;
  int failed_degree = -1;
  std::string reason;
  std::vector<Scalar> values;
};

DegreeSolution solve_by_degree(const DegreeProblem& problem);

}  // namespace frev
