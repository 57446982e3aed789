#include "frev/biseries.hpp"

#include <algorithm>

namespace frev {

namespace {

bool before(int i1, int j1, int i2, int j2) {
  const int d1 = i1 + j1;
  const int d2 = i2 + j2;
  return d1 != d2 ? d1 < d2 : i1 > i2;
}

bool term_before(const Term& a, const Term& b) { return before(a.i, a.j, b.i, b.j); }

void check_pair(const BiSeries& a, const BiSeries& b) {
  if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "bivariate series over different fields");
  if (a.trunc() != b.trunc()) {
    fail(ErrorKind::TruncMismatch,
         "total-degree truncations " + std::to_string(a.trunc()) + " and " + std::to_string(b.trunc()));
  }
}

}  // namespace

BiSeries BiSeries::monomial(const Scalar& c, int i, int j, int trunc) {
  BiSeries s(c.field(), trunc);
  s.add(i, j, c);
  return s;
}

Scalar BiSeries::get(int i, int j) const {
  const Term key{i, j, Scalar()};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, term_before);
  if (it != terms_.end() && it->i == i && it->j == j) return it->c;
  return field_.zero();
}

void BiSeries::add(int i, int j, const Scalar& c) {
  if (i + j > trunc_ || c.is_zero()) return;
  const Term key{i, j, Scalar()};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, term_before);
  if (it != terms_.end() && it->i == i && it->j == j) {
    it->c += c;
    if (it->c.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{i, j, c});
  }
}

void BiSeries::set(int i, int j, const Scalar& c) {
  if (i + j > trunc_) return;
  const Term key{i, j, Scalar()};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, term_before);
  const bool present = it != terms_.end() && it->i == i && it->j == j;
  if (c.is_zero()) {
    if (present) terms_.erase(it);
  } else if (present) {
    it->c = c;
  } else {
    terms_.insert(it, Term{i, j, c});
  }
}

int BiSeries::order() const { return terms_.empty() ? -1 : terms_.front().i + terms_.front().j; }

BiSeries BiSeries::truncate(int n) const {
  BiSeries s(field_, n);
  for (const auto& t : terms_) {
    if (t.i + t.j > n) break;
    s.terms_.push_back(t);
  }
  return s;
}

BiSeries BiSeries::pad(int n) const {
  if (n < trunc_) fail(ErrorKind::TruncMismatch, "pad cannot lower the truncation");
  BiSeries s = *this;
  s.trunc_ = n;
  return s;
}

BiSeries BiSeries::homog(int d) const {
  BiSeries s(field_, trunc_);
  for (const auto& t : terms_) {
    if (t.i + t.j == d) s.terms_.push_back(t);
  }
  return s;
}

BiSeries BiSeries::operator-() const {
  BiSeries s = *this;
  for (auto& t : s.terms_) t.c = -t.c;
  return s;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  check_pair(*this, o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && term_before(*a, *b))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || term_before(*b, *a)) {
      out.push_back(*b++);
    } else {
      Scalar c = a->c + b->c;
      if (!c.is_zero()) out.push_back(Term{a->i, a->j, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) { return *this += -o; }

BiSeries& BiSeries::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= s;
  return *this;
}

BiSeries mul_trunc(const BiSeries& a, const BiSeries& b, int n) {
  if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "bivariate series over different fields");
  BiSeries out(a.field(), n);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  const std::size_t cells = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
  std::vector<int> slot(cells, -1);
  std::vector<Scalar> acc;
  for (const auto& x : a.terms_) {
    if (x.i + x.j > n) break;
    for (const auto& y : b.terms_) {
      const int i = x.i + y.i;
      const int j = x.j + y.j;
      const int d = i + j;
      if (d > n) break;
      const std::size_t idx = static_cast<std::size_t>(d) * static_cast<std::size_t>(d + 1) / 2 +
                              static_cast<std::size_t>(j);
      if (slot[idx] < 0) {
        slot[idx] = static_cast<int>(acc.size());
        acc.push_back(x.c * y.c);
      } else {
        acc[static_cast<std::size_t>(slot[idx])].add_mul(x.c, y.c);
      }
    }
  }
  for (int d = 0; d <= n; ++d) {
    for (int j = 0; j <= d; ++j) {
      const std::size_t idx = static_cast<std::size_t>(d) * static_cast<std::size_t>(d + 1) / 2 +
                              static_cast<std::size_t>(j);
      if (slot[idx] >= 0 && !acc[static_cast<std::size_t>(slot[idx])].is_zero()) {
        out.terms_.push_back(Term{d - j, j, std::move(acc[static_cast<std::size_t>(slot[idx])])});
      }
    }
  }
  return out;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  check_pair(a, b);
  return mul_trunc(a, b, a.trunc());
}

bool operator==(const BiSeries& a, const BiSeries& b) {
  if (!(a.field_ == b.field_) || a.trunc_ != b.trunc_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    const auto& x = a.terms_[k];
    const auto& y = b.terms_[k];
    if (x.i != y.i || x.j != y.j || x.c != y.c) return false;
  }
  return true;
}

std::string BiSeries::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + t.c.str() + ")z1^" + std::to_string(t.i) + "z2^" + std::to_string(t.j);
  }
  return s;
}

std::map<int, BiSeries> type_decompose(const BiSeries& s) {
  std::map<int, BiSeries> out;
  for (const auto& t : s.terms()) {
    auto [it, inserted] = out.try_emplace(t.i - t.j, s.field(), s.trunc());
    it->second.add(t.i, t.j, t.c);
  }
  return out;
}

}  // namespace frev
