#include "frev/degree_solver.hpp"

namespace frev {

namespace {

std::vector<Scalar> coefficients_at(const std::vector<Series1>& res, int d, FieldSpec field) {
  std::vector<Scalar> out;
  out.reserve(res.size());
  for (const auto& s : res) out.push_back(d <= s.trunc() ? s[d] : field.zero());
  return out;
}

}  // namespace

DegreeSolution solve_by_degree(const DegreeProblem& pb) {
  const std::size_t n = pb.entry_degree.size();
  DegreeSolution sol;
  sol.values = pb.start.empty() ? std::vector<Scalar>(n, pb.field.zero()) : pb.start;
  std::vector<bool> fixed(n, false);

  for (int d = pb.first_degree; d <= pb.last_degree; ++d) {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < n; ++i) {
      if (!fixed[i] && pb.entry_degree[i] <= d) active.push_back(i);
    }
    const std::vector<Scalar> base = coefficients_at(pb.residual(sol.values, d), d, pb.field);
    const std::size_t rows = base.size();

    Matrix a(rows, std::vector<Scalar>(active.size(), pb.field.zero()));
    std::vector<bool> nonzero_col(active.size(), false);
    bool nonlinear = false;
    std::size_t frozen = n;
    for (std::size_t c = 0; c < active.size() && !nonlinear; ++c) {
      const std::size_t u = active[c];
      frozen = u;
      const Scalar saved = sol.values[u];
      sol.values[u] = saved + pb.field.one();
      const auto one = coefficients_at(pb.residual(sol.values, d), d, pb.field);
      sol.values[u] = saved + pb.field.from_int(2);
      const auto two = coefficients_at(pb.residual(sol.values, d), d, pb.field);
      sol.values[u] = saved;
      for (std::size_t r = 0; r < rows; ++r) {
        a[r][c] = one[r] - base[r];
        if (two[r] - base[r] != a[r][c] + a[r][c]) nonlinear = true;
        if (!a[r][c].is_zero()) nonzero_col[c] = true;
      }
    }

    if (nonlinear) {
      // An open unknown first seen nonlinearly is a free parameter of the
      // solution family; keep its current value and redo this degree.
      fixed[frozen] = true;
      --d;
      continue;
    }

    std::vector<Scalar> rhs;
    rhs.reserve(rows);
    for (const auto& b : base) rhs.push_back(-b);
    if (active.empty()) {
      for (const auto& b : base) {
        if (!b.is_zero()) {
          sol.failed_degree = d;
          sol.reason = "obstruction at degree " + std::to_string(d);
          return sol;
        }
      }
      continue;
    }
    const LinearSolution ls = solve_linear_exact(a, rhs);
    if (ls.status == SolveStatus::Inconsistent) {
      sol.failed_degree = d;
      sol.reason = "obstruction at degree " + std::to_string(d);
      return sol;
    }
    for (std::size_t c = 0; c < active.size(); ++c) {
      if (!nonzero_col[c]) continue;
      const std::size_t u = active[c];
      sol.values[u] += ls.particular[c];
      fixed[u] = true;
    }
  }
  sol.ok = true;
  return sol;
}

}  // namespace frev
