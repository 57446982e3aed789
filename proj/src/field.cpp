#include "frev/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace frev {

struct FieldData {
  int m = 1;
  int degree = 1;
  int unity_order = 2;
  std::vector<mpz_class> phi;  // monic, lowest degree first
};

namespace {

using ZPoly = std::vector<mpz_class>;

// Exact quotient of a by a monic divisor b.
ZPoly divide_monic(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const mpz_class c = a[i];
    q[i - db] = c;
    if (c != 0) {
      for (std::size_t l = 0; l <= db; ++l) a[i - db + l] -= c * b[l];
    }
  }
  return q;
}

ZPoly cyclotomic(int m, std::map<int, ZPoly>& memo) {
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  ZPoly p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_monic(p, cyclotomic(d, memo));
  }
  memo[m] = p;
  return p;
}

const FieldData* intern(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FieldData>> registry;
  static std::map<int, ZPoly> memo;
  std::lock_guard lock(mu);
  auto& slot = registry[m];
  if (!slot) {
    auto d = std::make_unique<FieldData>();
    d->m = m;
    d->phi = cyclotomic(m, memo);
    d->degree = static_cast<int>(d->phi.size()) - 1;
    d->unity_order = (m % 2 == 0) ? m : 2 * m;
    slot = std::move(d);
  }
  return slot.get();
}

bool exact_root(const mpz_class& v, int n, mpz_class& out) {
  if (v < 0) {
    if (n % 2 == 0) return false;
    mpz_class pos = -v;
    if (!exact_root(pos, n, out)) return false;
    out = -out;
    return true;
  }
  mpz_class r;
  const int exact = mpz_root(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n));
  if (!exact) return false;
  out = r;
  return true;
}

bool rational_root(const mpq_class& q, int n, mpq_class& out) {
  mpz_class a, b;
  if (!exact_root(q.get_num(), n, a) || !exact_root(q.get_den(), n, b)) return false;
  out = mpq_class(a, b);
  out.canonicalize();
  return true;
}

// Continued-fraction rounding of a double to a rational with bounded denominator.
bool rationalize(double x, mpq_class& out) {
  constexpr long kMaxDen = 1'000'000;
  if (!std::isfinite(x)) return false;
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double v = x;
  for (int it = 0; it < 40; ++it) {
    const double fl = std::floor(v);
    if (std::abs(fl) > 1e12) return false;
    const long a = static_cast<long>(fl);
    const long h2 = a * h1 + h0;
    const long k2 = a * k1 + k0;
    if (k2 > kMaxDen) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) < 1e-10) break;
    const double frac = v - fl;
    if (frac < 1e-14) break;
    v = 1.0 / frac;
  }
  if (k1 == 0) return false;
  if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) > 1e-8) return false;
  out = mpq_class(h1, k1);
  out.canonicalize();
  return true;
}

using Cx = std::complex<double>;

// Solve a small dense complex system; returns false when singular.
bool complex_solve(std::vector<std::vector<Cx>> a, std::vector<Cx>& b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-12) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Cx f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return true;
}

void push_unique(std::vector<Scalar>& out, const Scalar& s) {
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
}

}  // namespace

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::OrderNotInField: return "OrderNotInField";
    case ErrorKind::RootNotInField: return "RootNotInField";
    case ErrorKind::TruncMismatch: return "TruncMismatch";
    case ErrorKind::ConstantTermInInner: return "ConstantTermInInner";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::BadBranch: return "BadBranch";
    case ErrorKind::NotTangentToIdentity: return "NotTangentToIdentity";
    case ErrorKind::IdentityInput: return "IdentityInput";
    case ErrorKind::TruncationTooLow: return "TruncationTooLow";
    case ErrorKind::BadOmega: return "BadOmega";
    case ErrorKind::NotFiniteOrder: return "NotFiniteOrder";
    case ErrorKind::HypothesisFails: return "HypothesisFails";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::OrderNotOne: return "OrderNotOne";
    case ErrorKind::WrongParity: return "WrongParity";
    case ErrorKind::NotResonantShape: return "NotResonantShape";
    case ErrorKind::BadLinearPart: return "BadLinearPart";
    case ErrorKind::ZeroDivisorEncountered: return "ZeroDivisorEncountered";
    case ErrorKind::NotReversibleClass: return "NotReversibleClass";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::BadSymmetry: return "BadSymmetry";
    case ErrorKind::NotReversible: return "NotReversible";
    case ErrorKind::NotGeneric: return "NotGeneric";
    case ErrorKind::BadDeterminant: return "BadDeterminant";
    case ErrorKind::SubfactorizationFailed: return "SubfactorizationFailed";
    case ErrorKind::SearchFailed: return "SearchFailed";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- FieldSpec

FieldSpec::FieldSpec() : d_(intern(1)) {}

FieldSpec FieldSpec::make(int m) {
  if (m < 1) fail(ErrorKind::Parse, "field conductor must be positive, got " + std::to_string(m));
  return FieldSpec(intern(m));
}

int FieldSpec::m() const { return d_->m; }
int FieldSpec::degree() const { return d_->degree; }
const std::vector<mpz_class>& FieldSpec::cyclotomic() const { return d_->phi; }
int FieldSpec::unity_order() const { return d_->unity_order; }

Scalar FieldSpec::zero() const { return Scalar(*this); }
Scalar FieldSpec::one() const { return Scalar(*this, mpq_class(1)); }
Scalar FieldSpec::from_int(long v) const { return Scalar(*this, mpq_class(v)); }
Scalar FieldSpec::from_rational(const mpq_class& q) const { return Scalar(*this, q); }

Scalar FieldSpec::zeta() const {
  std::vector<mpq_class> p(2);
  p[1] = 1;
  return Scalar(*this, std::move(p));
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(FieldSpec field) : field_(field), c_(static_cast<std::size_t>(field.degree())) {}

Scalar::Scalar(FieldSpec field, const mpq_class& q) : Scalar(field) {
  c_[0] = q;
  c_[0].canonicalize();
}

Scalar::Scalar(FieldSpec field, std::vector<mpq_class> poly) : field_(field) {
  const auto d = static_cast<std::size_t>(field.degree());
  for (auto& q : poly) q.canonicalize();
  if (poly.size() > d) reduce_long(poly);
  poly.resize(d);
  c_ = std::move(poly);
}

void Scalar::reduce_long(std::vector<mpq_class>& t) const {
  const auto& phi = field_.cyclotomic();
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = t.size(); i-- > d;) {
    if (sgn(t[i]) == 0) continue;
    const mpq_class c = t[i];
    for (std::size_t l = 0; l < d; ++l) {
      if (sgn(phi[l]) != 0) t[i - d + l] -= c * phi[l];
    }
    t[i] = 0;
  }
  t.resize(d);
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    fail(ErrorKind::FieldMismatch,
         "Q(zeta_" + std::to_string(field_.m()) + ") vs Q(zeta_" + std::to_string(o.field_.m()) + ")");
  }
}

bool Scalar::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& q) { return sgn(q) == 0; });
}

bool Scalar::is_one() const { return c_[0] == 1 && is_rational(); }

bool Scalar::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& q) { return sgn(q) == 0; });
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  for (auto& q : r.c_) q = -q;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  const std::size_t d = c_.size();
  if (d == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<mpq_class> t(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(o.c_[j]) != 0) t[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce_long(t);
  c_ = std::move(t);
  return *this;
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
  if (c_.size() == 1) {
    check_same(a);
    check_same(b);
    if (sgn(a.c_[0]) == 0 || sgn(b.c_[0]) == 0) return;
    c_[0] += a.c_[0] * b.c_[0];
    return;
  }
  *this += a * b;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  const std::size_t d = c_.size();
  if (d == 1) return Scalar(field_, 1 / c_[0]);
  // Columns of the multiplication-by-this matrix are this * zeta^l.
  std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(d + 1));
  Scalar col = *this;
  const Scalar z = field_.zeta();
  for (std::size_t l = 0; l < d; ++l) {
    for (std::size_t r = 0; r < d; ++r) a[r][l] = col.c_[r];
    col *= z;
  }
  a[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (piv < d && sgn(a[piv][c]) == 0) ++piv;
    if (piv == d) fail(ErrorKind::DivisionByZero, "singular multiplication matrix");
    std::swap(a[piv], a[c]);
    const mpq_class inv = 1 / a[c][c];
    for (std::size_t k = c; k <= d; ++k) a[c][k] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      const mpq_class f = a[r][c];
      for (std::size_t k = c; k <= d; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<mpq_class> res(d);
  for (std::size_t r = 0; r < d; ++r) res[r] = a[r][d];
  return Scalar(field_, std::move(res));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero scalar");
  return *this *= o.inverse();
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = field_.one();
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

std::string Scalar::str() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ", ";
    out += c_[i].get_num().get_str() + "/" + c_[i].get_den().get_str();
  }
  return out;
}

std::complex<double> Scalar::embed(int j) const {
  const double ang = 2.0 * std::numbers::pi * j / field_.m();
  const Cx z(std::cos(ang), std::sin(ang));
  Cx acc = 0, zp = 1;
  for (const auto& q : c_) {
    acc += q.get_d() * zp;
    zp *= z;
  }
  return acc;
}

// ---------------------------------------------------------------- roots

namespace {

Scalar unity_generator(FieldSpec field) {
  if (field.m() % 2 == 0) return field.zeta();
  return -field.zeta();
}

}  // namespace

Scalar root_of_unity(FieldSpec field, long numerator, long denominator) {
  const long order = field.unity_order();
  if (denominator <= 0 || order % denominator != 0) {
    fail(ErrorKind::OrderNotInField, "no root of unity of order " + std::to_string(denominator) +
                                         " in Q(zeta_" + std::to_string(field.m()) + ")");
  }
  long e = (order / denominator) * numerator % order;
  if (e < 0) e += order;
  return unity_generator(field).pow(e);
}

std::vector<Scalar> roots_of_unity(FieldSpec field) {
  std::vector<Scalar> out;
  const Scalar g = unity_generator(field);
  Scalar cur = field.one();
  for (int e = 0; e < field.unity_order(); ++e) {
    out.push_back(cur);
    cur *= g;
  }
  return out;
}

int unity_order_of(const Scalar& a) {
  const int order = a.field().unity_order();
  Scalar cur = a;
  for (int j = 1; j <= order; ++j) {
    if (cur.is_one()) return j;
    cur *= a;
  }
  return 0;
}

std::vector<Scalar> field_roots(const Scalar& a, int n) {
  const FieldSpec field = a.field();
  std::vector<Scalar> out;
  if (n <= 0) return out;
  if (a.is_zero()) {
    out.push_back(a);
    return out;
  }
  for (const Scalar& v : roots_of_unity(field)) {
    const Scalar b = a / v.pow(n);
    mpq_class r;
    if (b.is_rational() && rational_root(b.rational_part(), n, r)) push_unique(out, field.from_rational(r) * v);
  }
  if (!out.empty()) return out;

  // Reconstruct from embeddings: pick one complex n-th root per embedding,
  // invert the Vandermonde system and round to small rationals.
  const int m = field.m();
  const int d = field.degree();
  std::vector<int> emb;
  for (int j = 1; j <= m; ++j) {
    if (std::gcd(j, m) == 1) emb.push_back(j % m);
  }
  double combos = std::pow(static_cast<double>(n), d);
  if (combos > 20000) return out;
  std::vector<std::vector<Cx>> vand(static_cast<std::size_t>(d), std::vector<Cx>(static_cast<std::size_t>(d)));
  std::vector<Cx> base(static_cast<std::size_t>(d));
  for (int r = 0; r < d; ++r) {
    const double ang = 2.0 * std::numbers::pi * emb[static_cast<std::size_t>(r)] / m;
    const Cx z(std::cos(ang), std::sin(ang));
    Cx zp = 1;
    for (int l = 0; l < d; ++l) {
      vand[static_cast<std::size_t>(r)][static_cast<std::size_t>(l)] = zp;
      zp *= z;
    }
    base[static_cast<std::size_t>(r)] = std::pow(a.embed(emb[static_cast<std::size_t>(r)]), 1.0 / n);
  }
  const Cx rot = std::polar(1.0, 2.0 * std::numbers::pi / n);
  const long total = static_cast<long>(combos);
  for (long code = 0; code < total; ++code) {
    std::vector<Cx> rhs(static_cast<std::size_t>(d));
    long c = code;
    for (int r = 0; r < d; ++r) {
      rhs[static_cast<std::size_t>(r)] = base[static_cast<std::size_t>(r)] * std::pow(rot, static_cast<int>(c % n));
      c /= n;
    }
    if (!complex_solve(vand, rhs)) return out;
    std::vector<mpq_class> coeffs(static_cast<std::size_t>(d));
    bool ok = true;
    for (int l = 0; l < d && ok; ++l) {
      const Cx v = rhs[static_cast<std::size_t>(l)];
      ok = std::abs(v.imag()) < 1e-7 && rationalize(v.real(), coeffs[static_cast<std::size_t>(l)]);
    }
    if (!ok) continue;
    Scalar cand(field, std::move(coeffs));
    if (cand.pow(n) == a) push_unique(out, cand);
  }
  return out;
}

Scalar parse_scalar(FieldSpec field, std::string_view text) {
  std::vector<mpq_class> coeffs;
  std::string s(text);
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part.erase(std::remove_if(part.begin(), part.end(), [](unsigned char ch) { return std::isspace(ch); }),
               part.end());
    if (part.empty()) fail(ErrorKind::Parse, "empty scalar component in '" + s + "'");
    mpq_class q;
    if (q.set_str(part, 10) != 0 || q.get_den() == 0) fail(ErrorKind::Parse, "bad rational '" + part + "'");
    q.canonicalize();
    coeffs.push_back(q);
  }
  if (coeffs.empty()) fail(ErrorKind::Parse, "empty scalar");
  if (coeffs.size() > static_cast<std::size_t>(field.degree())) {
    fail(ErrorKind::Parse, "scalar '" + s + "' has more components than the field degree");
  }
  return Scalar(field, std::move(coeffs));
}

}  // namespace frev
