#include "frev/map2.hpp"

#include "frev/linsolve.hpp"

namespace frev {

LinearMap2 LinearMap2::identity(FieldSpec field) { return {field.one(), field.zero(), field.zero(), field.one()}; }

LinearMap2 LinearMap2::diag(const Scalar& x, const Scalar& y) {
  const FieldSpec field = x.field();
  return {x, field.zero(), field.zero(), y};
}

LinearMap2 LinearMap2::inverse() const {
  const Scalar dt = det();
  if (dt.is_zero()) fail(ErrorKind::NotInvertible, "singular linear part");
  const Scalar inv = dt.inverse();
  return {d * inv, -(b * inv), -(c * inv), a * inv};
}

LinearMap2 operator*(const LinearMap2& x, const LinearMap2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Map2::Map2(BiSeries c1, BiSeries c2) : comp1(std::move(c1)), comp2(std::move(c2)) {
  if (!(comp1.field() == comp2.field())) fail(ErrorKind::FieldMismatch, "map components over different fields");
  if (comp1.trunc() != comp2.trunc()) fail(ErrorKind::TruncMismatch, "map components with different truncations");
}

Map2 Map2::identity(FieldSpec field, int trunc) {
  return Map2(BiSeries::monomial(field.one(), 1, 0, trunc), BiSeries::monomial(field.one(), 0, 1, trunc));
}

Map2 Map2::linear(const LinearMap2& l, int trunc) {
  BiSeries c1(l.a.field(), trunc);
  BiSeries c2(l.a.field(), trunc);
  c1.add(1, 0, l.a);
  c1.add(0, 1, l.b);
  c2.add(1, 0, l.c);
  c2.add(0, 1, l.d);
  return Map2(std::move(c1), std::move(c2));
}

bool Map2::is_identity() const { return *this == identity(field(), trunc()); }

namespace {

void require_no_constant(const Map2& g) {
  if (!g.comp1.get(0, 0).is_zero() || !g.comp2.get(0, 0).is_zero()) {
    fail(ErrorKind::ConstantTermInInner, "inner map has a constant term");
  }
}

std::vector<BiSeries> powers(const BiSeries& g, int upto, int n) {
  std::vector<BiSeries> p;
  p.push_back(BiSeries::monomial(g.field().one(), 0, 0, n));
  for (int j = 1; j <= upto; ++j) p.push_back(mul_trunc(p.back(), g, n));
  return p;
}

// Horner in G1 over the columns A_i = sum_j c_ij G2^j.
BiSeries substitute_with(const BiSeries& s, const BiSeries& g1, const std::vector<BiSeries>& p2) {
  const int n = s.trunc();
  int imax = 0;
  for (const auto& t : s.terms()) imax = std::max(imax, t.i);
  std::vector<BiSeries> cols;
  cols.reserve(static_cast<std::size_t>(imax) + 1);
  for (int i = 0; i <= imax; ++i) cols.emplace_back(s.field(), n - i);
  for (const auto& t : s.terms()) {
    BiSeries term = p2[static_cast<std::size_t>(t.j)].truncate(n - t.i);
    term *= t.c;
    cols[static_cast<std::size_t>(t.i)] += term;
  }
  BiSeries acc = cols[static_cast<std::size_t>(imax)];
  for (int i = imax - 1; i >= 0; --i) {
    acc = mul_trunc(acc, g1, n - i);
    acc += cols[static_cast<std::size_t>(i)];
  }
  return acc;
}

int max_j(const BiSeries& s) {
  int m = 0;
  for (const auto& t : s.terms()) m = std::max(m, t.j);
  return m;
}

}  // namespace

BiSeries substitute(const BiSeries& s, const Map2& g) {
  if (s.trunc() != g.trunc()) fail(ErrorKind::TruncMismatch, "substitution with mismatched truncations");
  require_no_constant(g);
  return substitute_with(s, g.comp1, powers(g.comp2, max_j(s), s.trunc()));
}

Map2 compose(const Map2& f, const Map2& g) {
  if (f.trunc() != g.trunc()) {
    fail(ErrorKind::TruncMismatch,
         "map truncations " + std::to_string(f.trunc()) + " and " + std::to_string(g.trunc()));
  }
  if (!(f.field() == g.field())) fail(ErrorKind::FieldMismatch, "maps over different fields");
  require_no_constant(g);
  const auto p2 = powers(g.comp2, std::max(max_j(f.comp1), max_j(f.comp2)), f.trunc());
  return Map2(substitute_with(f.comp1, g.comp1, p2), substitute_with(f.comp2, g.comp1, p2));
}

Map2 apply_linear(const LinearMap2& l, const Map2& f) {
  return Map2(f.comp1 * l.a + f.comp2 * l.b, f.comp1 * l.c + f.comp2 * l.d);
}

LinearMap2 linear_part(const Map2& f) {
  return {f.comp1.get(1, 0), f.comp1.get(0, 1), f.comp2.get(1, 0), f.comp2.get(0, 1)};
}

Map2 homog_part(const Map2& f, int k) { return Map2(f.comp1.homog(k), f.comp2.homog(k)); }

Map2 inverse(const Map2& f) {
  const int n = f.trunc();
  const LinearMap2 l = linear_part(f);
  if (l.det().is_zero()) fail(ErrorKind::NotInvertible, "linear part is singular");
  require_no_constant(f);
  const LinearMap2 li = l.inverse();
  const Map2 lin = Map2::linear(l, n);
  const Map2 nl(f.comp1 - lin.comp1, f.comp2 - lin.comp2);
  Map2 g = Map2::linear(li, n);
  // F = L + NL, so G = L^-1 (z - NL(G)); degree s of G needs G below s only.
  for (int s = 2; s <= n; ++s) {
    const Map2 nls = compose(nl.truncate(s), g.truncate(s));
    const Map2 upd = apply_linear(li, homog_part(nls, s));
    g.comp1 -= upd.comp1.pad(n);
    g.comp2 -= upd.comp2.pad(n);
  }
  return g;
}

Map2 iterate(const Map2& f, long n) {
  if (n < 0) return iterate(inverse(f), -n);
  Map2 result = Map2::identity(f.field(), f.trunc());
  Map2 base = f;
  while (n > 0) {
    if (n & 1) result = compose(result, base);
    n >>= 1;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

bool is_resonant(const Map2& f) {
  for (const auto& t : f.comp1.terms()) {
    if (t.i != t.j + 1) return false;
  }
  for (const auto& t : f.comp2.terms()) {
    if (t.j != t.i + 1) return false;
  }
  return true;
}

bool is_inverse_resonant(const Map2& f) {
  for (const auto& t : f.comp1.terms()) {
    if (t.j != t.i + 1) return false;
  }
  for (const auto& t : f.comp2.terms()) {
    if (t.i != t.j + 1) return false;
  }
  return true;
}

namespace {

std::optional<LinearMap2> invertible_combination(const std::vector<std::vector<Scalar>>& basis, FieldSpec field) {
  auto as_map = [](const std::vector<Scalar>& v) { return LinearMap2{v[0], v[1], v[2], v[3]}; };
  for (const auto& v : basis) {
    if (!as_map(v).det().is_zero()) return as_map(v);
  }
  for (std::size_t x = 0; x < basis.size(); ++x) {
    for (std::size_t y = x + 1; y < basis.size(); ++y) {
      for (long w = 1; w <= 3; ++w) {
        std::vector<Scalar> v(4, field.zero());
        for (int r = 0; r < 4; ++r) v[r] = basis[x][r] + basis[y][r] * field.from_int(w);
        if (!as_map(v).det().is_zero()) return as_map(v);
      }
    }
  }
  return std::nullopt;
}

// Eigenvector of l for the eigenvalue lam, as a column (x, y).
std::pair<Scalar, Scalar> eigenvector(const LinearMap2& l, const Scalar& lam) {
  const FieldSpec field = l.a.field();
  if (!l.b.is_zero()) return {l.b, lam - l.a};
  if (!l.c.is_zero()) return {lam - l.d, l.c};
  if (l.a == lam) return {field.one(), field.zero()};
  return {field.zero(), field.one()};
}

}  // namespace

Certificate linear_is_reversible(const LinearMap2& l, int trunc) {
  const FieldSpec field = l.a.field();
  const Scalar det = l.det();
  if (det.is_zero()) fail(ErrorKind::Singular, "linear part is singular");
  Certificate cert;
  cert.degree = trunc;
  const bool involution = l * l == LinearMap2::identity(field);
  cert.verdict = det.is_one() || involution;
  if (!cert.verdict) {
    cert.notes.push_back("eigenvalues do not pair as lambda, 1/lambda");
    return cert;
  }

  // Reversers R solve L R = R L^-1; unknowns are (r_a, r_b, r_c, r_d).
  const LinearMap2 li = l.inverse();
  const Scalar z = field.zero();
  Matrix a = {
      {l.a - li.a, -li.c, l.b, z},
      {-li.b, l.a - li.d, z, l.b},
      {l.c, z, l.d - li.a, -li.c},
      {z, l.c, -li.b, l.d - li.d},
  };
  const LinearSolution ls = solve_linear_exact(a, std::vector<Scalar>(4, z));
  if (const auto r = invertible_combination(ls.nullspace, field)) {
    cert.witness = Map2::linear(*r, trunc);
  } else {
    cert.notes.push_back("no invertible reverser among small combinations of the solution space");
  }

  const Scalar disc = l.trace() * l.trace() - det * field.from_int(4);
  const auto roots = field_roots(disc, 2);
  if (roots.empty()) {
    cert.tag = involution ? "involution" : "diagonal";
    cert.notes.push_back("eigenvalues outside the field; no conjugator");
    return cert;
  }
  const Scalar half = field.from_rational(mpq_class(1, 2));
  const Scalar l1 = (l.trace() + roots.front()) * half;
  const Scalar l2 = (l.trace() - roots.front()) * half;
  LinearMap2 s;
  if (l1 != l2) {
    const auto [x1, y1] = eigenvector(l, l1);
    const auto [x2, y2] = eigenvector(l, l2);
    s = {x1, x2, y1, y2};
    cert.tag = involution ? "involution" : "diagonal";
  } else if (l == LinearMap2::diag(l1, l1)) {
    s = LinearMap2::identity(field);
    cert.tag = involution ? "involution" : "scalar";
  } else {
    const LinearMap2 nil{l.a - l1, l.b, l.c, l.d - l1};
    const bool first = !(nil.a.is_zero() && nil.c.is_zero());
    const Scalar wx = first ? field.one() : field.zero();
    const Scalar wy = first ? field.zero() : field.one();
    s = {nil.a * wx + nil.b * wy, wx, nil.c * wx + nil.d * wy, wy};
    cert.tag = "jordan";
  }
  cert.conjugator = Map2::linear(s, trunc);
  return cert;
}

Map2 linearize_finite_order(const Map2& th, int order) {
  if (order <= 0 || !iterate(th, order).is_identity()) {
    fail(ErrorKind::NotFiniteOrder, "th^" + std::to_string(order) + " is not the identity");
  }
  const FieldSpec field = th.field();
  const LinearMap2 l = linear_part(th);
  const LinearMap2 li = l.inverse();
  Map2 power = Map2::identity(field, th.trunc());
  LinearMap2 weight = LinearMap2::identity(field);
  BiSeries h1(field, th.trunc());
  BiSeries h2(field, th.trunc());
  for (int j = 0; j < order; ++j) {
    const Map2 term = apply_linear(weight, power);
    h1 += term.comp1;
    h2 += term.comp2;
    power = compose(th, power);
    weight = weight * li;
  }
  const Scalar inv = field.from_int(order).inverse();
  Map2 h(h1 * inv, h2 * inv);
  if (apply_linear(l, h) != compose(h, th)) fail(ErrorKind::NotFiniteOrder, "averaging did not linearize");
  return h;
}

std::string map_str(const Map2& f) { return "(" + f.comp1.str() + ", " + f.comp2.str() + ")"; }

LinearMap2 eigenbasis(const LinearMap2& l, const Scalar& l1, const Scalar& l2) {
  auto vec = [&](const Scalar& lam) -> std::pair<Scalar, Scalar> {
    const FieldSpec field = l.a.field();
    if (!l.b.is_zero()) return {l.b, lam - l.a};
    if (!l.c.is_zero()) return {lam - l.d, l.c};
    if (l.a == lam) return {field.one(), field.zero()};
    return {field.zero(), field.one()};
  };
  const auto [x1, y1] = vec(l1);
  const auto [x2, y2] = vec(l2);
  return {x1, x2, y1, y2};
}

}  // namespace frev
