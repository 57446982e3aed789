#include "frev/series1.hpp"

namespace frev {

Series1::Series1(FieldSpec field, int trunc)
    : field_(field), c_(static_cast<std::size_t>(trunc < 0 ? 0 : trunc) + 1, field.zero()) {}

Series1::Series1(FieldSpec field, std::vector<Scalar> coeffs) : field_(field), c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(field.zero());
  for (const auto& s : c_) {
    if (!(s.field() == field_)) fail(ErrorKind::FieldMismatch, "series coefficient in another field");
  }
}

Series1 Series1::identity(FieldSpec field, int trunc) {
  Series1 s(field, trunc);
  if (trunc >= 1) s[1] = field.one();
  return s;
}

Series1 Series1::constant(const Scalar& c, int trunc) {
  Series1 s(c.field(), trunc);
  s[0] = c;
  return s;
}

Series1 Series1::monomial(const Scalar& c, int degree, int trunc) {
  Series1 s(c.field(), trunc);
  if (degree <= trunc) s[degree] = c;
  return s;
}

Series1 Series1::from_rationals(FieldSpec field, int trunc, const std::vector<mpq_class>& coeffs) {
  Series1 s(field, trunc);
  for (std::size_t j = 0; j < coeffs.size() && static_cast<int>(j) <= trunc; ++j) {
    s[static_cast<int>(j)] = field.from_rational(coeffs[j]);
  }
  return s;
}

int Series1::order() const {
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (!c_[j].is_zero()) return static_cast<int>(j);
  }
  return kInfOrder;
}

bool Series1::is_identity() const {
  for (int j = 0; j <= trunc(); ++j) {
    if (j == 1 ? !c_[1].is_one() : !c_[static_cast<std::size_t>(j)].is_zero()) return false;
  }
  return true;
}

bool Series1::is_constant() const {
  for (std::size_t j = 1; j < c_.size(); ++j) {
    if (!c_[j].is_zero()) return false;
  }
  return true;
}

Series1 Series1::truncate(int n) const {
  if (n > trunc()) fail(ErrorKind::TruncMismatch, "truncate cannot raise the truncation");
  return Series1(field_, std::vector<Scalar>(c_.begin(), c_.begin() + n + 1));
}

Series1 Series1::pad(int n) const {
  if (n < trunc()) fail(ErrorKind::TruncMismatch, "pad cannot lower the truncation");
  Series1 s = *this;
  s.c_.resize(static_cast<std::size_t>(n) + 1, field_.zero());
  return s;
}

void check_trunc(const Series1& a, const Series1& b) {
  if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "series over different fields");
  if (a.trunc() != b.trunc()) {
    fail(ErrorKind::TruncMismatch,
         "truncations " + std::to_string(a.trunc()) + " and " + std::to_string(b.trunc()));
  }
}

Series1 Series1::operator-() const {
  Series1 s = *this;
  for (auto& c : s.c_) c = -c;
  return s;
}

Series1& Series1::operator+=(const Series1& o) {
  check_trunc(*this, o);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (!o.c_[j].is_zero()) c_[j] += o.c_[j];
  }
  return *this;
}

Series1& Series1::operator-=(const Series1& o) {
  check_trunc(*this, o);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (!o.c_[j].is_zero()) c_[j] -= o.c_[j];
  }
  return *this;
}

Series1& Series1::operator*=(const Scalar& s) {
  for (auto& c : c_) {
    if (!c.is_zero()) c *= s;
  }
  return *this;
}

Series1 operator*(const Series1& a, const Series1& b) {
  check_trunc(a, b);
  const int n = a.trunc();
  Series1 out(a.field(), n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (!b[j].is_zero()) out[i + j].add_mul(a[i], b[j]);
    }
  }
  return out;
}

std::string Series1::str() const {
  std::string s = "[";
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (j) s += "; ";
    s += c_[j].str();
  }
  return s + "]";
}

Series1 compose(const Series1& f, const Series1& g) {
  check_trunc(f, g);
  if (!g[0].is_zero()) fail(ErrorKind::ConstantTermInInner, "inner series has a constant term");
  const int n = f.trunc();
  Series1 acc = Series1::constant(f[n], n);
  for (int j = n - 1; j >= 0; --j) {
    acc = acc * g;
    acc[0] += f[j];
  }
  return acc;
}

Series1 derivative(const Series1& f) {
  const int n = f.trunc();
  if (n == 0) return Series1(f.field(), 0);
  Series1 d(f.field(), n - 1);
  for (int j = 1; j <= n; ++j) {
    if (!f[j].is_zero()) d[j - 1] = f[j] * f.field().from_int(j);
  }
  return d;
}

Series1 times_t(const Series1& f) {
  Series1 s(f.field(), f.trunc() + 1);
  for (int j = 0; j <= f.trunc(); ++j) s[j + 1] = f[j];
  return s;
}

Series1 div_t(const Series1& f) {
  if (!f[0].is_zero()) fail(ErrorKind::NotInvertible, "division by t of a series with constant term");
  if (f.trunc() == 0) return Series1(f.field(), 0);
  Series1 s(f.field(), f.trunc() - 1);
  for (int j = 1; j <= f.trunc(); ++j) s[j - 1] = f[j];
  return s;
}

Series1 mul_inverse(const Series1& u) {
  if (u[0].is_zero()) fail(ErrorKind::NotUnit, "constant term is zero");
  const int n = u.trunc();
  const Scalar inv0 = u[0].inverse();
  Series1 v(u.field(), n);
  v[0] = inv0;
  for (int j = 1; j <= n; ++j) {
    Scalar acc = u.field().zero();
    for (int i = 1; i <= j; ++i) {
      if (!u[i].is_zero()) acc.add_mul(u[i], v[j - i]);
    }
    if (!acc.is_zero()) v[j] = -(acc * inv0);
  }
  return v;
}

Series1 divide(const Series1& a, const Series1& b) { return a * mul_inverse(b); }

Series1 comp_inverse(const Series1& f) {
  if (!f[0].is_zero() || f.trunc() < 1 || f[1].is_zero()) {
    fail(ErrorKind::NotInvertible, "series is not of order exactly one");
  }
  const int n = f.trunc();
  const Series1 t = Series1::identity(f.field(), n);
  const Series1 df = derivative(f).pad(n);
  Series1 g = t * f[1].inverse();
  // Newton: each pass doubles the number of correct coefficients.
  for (int pass = 0; pass < 64; ++pass) {
    const Series1 e = compose(f, g) - t;
    if (e.is_zero()) return g;
    g -= divide(e, compose(df, g));
  }
  fail(ErrorKind::NotInvertible, "Newton iteration did not settle");
}

Series1 unit_power(const Series1& u, const Scalar& alpha) {
  if (!u[0].is_one()) fail(ErrorKind::BadBranch, "unit_power needs constant term 1");
  const int n = u.trunc();
  const FieldSpec field = u.field();
  Series1 r(field, n);
  r[0] = field.one();
  for (int j = 1; j <= n; ++j) {
    Scalar acc = field.zero();
    for (int i = 1; i <= j; ++i) {
      if (u[i].is_zero() || r[j - i].is_zero()) continue;
      const Scalar w = alpha * field.from_int(i) - field.from_int(j - i);
      acc += w * u[i] * r[j - i];
    }
    if (!acc.is_zero()) r[j] = acc / field.from_int(j);
  }
  return r;
}

Series1 nth_root_unit(const Series1& u, int n, const Scalar& root) {
  if (n <= 0) fail(ErrorKind::BadBranch, "root index must be positive");
  if (u[0].is_zero()) fail(ErrorKind::NotUnit, "constant term is zero");
  if (root.pow(n) != u[0]) fail(ErrorKind::BadBranch, "chosen root does not match the constant term");
  const FieldSpec field = u.field();
  Series1 r = unit_power(u * u[0].inverse(), field.from_rational(mpq_class(1, n)));
  return r * root;
}

Series1 binomial_series(const Scalar& coef, int k, const Scalar& alpha, int trunc) {
  Series1 base = Series1::constant(coef.field().one(), trunc);
  if (k <= trunc) base[k] = coef;
  return unit_power(base, alpha);
}

Series1 exp_series(const Series1& w) {
  if (!w[0].is_zero()) fail(ErrorKind::BadShape, "exp needs w(0) = 0");
  const int n = w.trunc();
  const FieldSpec field = w.field();
  // E' = w' E, so j E_j = sum_i i w_i E_(j-i).
  Series1 e(field, n);
  e[0] = field.one();
  for (int j = 1; j <= n; ++j) {
    Scalar acc = field.zero();
    for (int i = 1; i <= j; ++i) {
      if (!w[i].is_zero()) acc += field.from_int(i) * w[i] * e[j - i];
    }
    if (!acc.is_zero()) e[j] = acc / field.from_int(j);
  }
  return e;
}

Series1 pow(const Series1& f, long e) {
  if (e < 0) return pow(mul_inverse(f), -e);
  Series1 result = Series1::constant(f.field().one(), f.trunc());
  Series1 base = f;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Series1 iterate(const Series1& f, long n) {
  if (n < 0) return iterate(comp_inverse(f), -n);
  Series1 result = Series1::identity(f.field(), f.trunc());
  Series1 base = f;
  while (n > 0) {
    if (n & 1) result = compose(result, base);
    n >>= 1;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

}  // namespace frev
