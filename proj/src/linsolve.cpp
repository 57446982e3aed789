#include "frev/linsolve.hpp"

namespace frev {

LinearSolution solve_linear_exact(const Matrix& a, const std::vector<Scalar>& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) fail(ErrorKind::BadShape, "right-hand side length differs from row count");
  const std::size_t cols = rows ? a[0].size() : 0;
  FieldSpec field = rows ? b[0].field() : FieldSpec();

  Matrix m(rows, std::vector<Scalar>(cols + 1, field.zero()));
  for (std::size_t r = 0; r < rows; ++r) {
    if (a[r].size() != cols) fail(ErrorKind::BadShape, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(a[r][c].field() == field)) fail(ErrorKind::FieldMismatch, "matrix entries span several fields");
      m[r][c] = a[r][c];
    }
    if (!(b[r].field() == field)) fail(ErrorKind::FieldMismatch, "right-hand side in another field");
    m[r][cols] = b[r];
  }

  std::vector<int> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    const Scalar inv = m[row][c].inverse();
    for (std::size_t k = c; k <= cols; ++k) {
      if (!m[row][k].is_zero()) m[row][k] *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      const Scalar f = m[r][c];
      for (std::size_t k = c; k <= cols; ++k) {
        if (!m[row][k].is_zero()) m[r][k] -= f * m[row][k];
      }
    }
    pivots.push_back(static_cast<int>(c));
    ++row;
  }

  LinearSolution out;
  for (std::size_t r = row; r < rows; ++r) {
    if (!m[r][cols].is_zero()) {
      out.status = SolveStatus::Inconsistent;
      return out;
    }
  }

  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  out.pivot_vars = pivots;
  out.particular.assign(cols, field.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) out.particular[static_cast<std::size_t>(pivots[r])] = m[r][cols];

  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    out.free_vars.push_back(static_cast<int>(f));
    std::vector<Scalar> v(cols, field.zero());
    v[f] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[static_cast<std::size_t>(pivots[r])] = -m[r][f];
    out.nullspace.push_back(std::move(v));
  }
  out.status = out.free_vars.empty() ? SolveStatus::Unique : SolveStatus::Family;
  return out;
}

std::vector<Scalar> mat_vec(const Matrix& a, const std::vector<Scalar>& x) {
  std::vector<Scalar> out;
  out.reserve(a.size());
  for (const auto& row : a) {
    Scalar acc = x.empty() ? Scalar() : x[0].field().zero();
    for (std::size_t c = 0; c < row.size(); ++c) acc.add_mul(row[c], x[c]);
    out.push_back(acc);
  }
  return out;
}

}  // namespace frev
