#pragma once

#include <vector>

#include "frev/field.hpp"

namespace frev {

using Matrix = std::vector<std::vector<Scalar>>;

enum class SolveStatus { Unique, Family, Inconsistent };

/// Result of an exact reduced-row-echelon solve. For a family, the general
/// solution is particular + sum_i s_i * nullspace[i] with free parameters s_i
/// attached to the variables listed in `free_vars`.
struct LinearSolution {
  SolveStatus status = SolveStatus::Inconsistent;
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> nullspace;
  std::vector<int> free_vars;
  std::vector<int> pivot_vars;
};

LinearSolution solve_linear_exact(const Matrix& a, const std::vector<Scalar>& b);

/// A * x with exact arithmetic.
std::vector<Scalar> mat_vec(const Matrix& a, const std::vector<Scalar>& x);

}  // namespace frev
