#include "bispec/poly.hpp"

#include <algorithm>
#include <sstream>

#include "bispec/error.hpp"

namespace bispec {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

void Poly::strip() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const Rational& c, int degree) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<Rational>& roots) {
  Poly p(1);
  for (const auto& r : roots) p = p * Poly({-r, Rational(1)});
  return p;
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
  if (c_.empty()) fail(ErrorKind::kDomain, "leading coefficient of zero");
  return c_.back();
}

int Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

bool Poly::is_monomial() const {
  return !c_.empty() && valuation() == degree();
}

Rational Poly::eval(const Rational& t) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (c_.empty()) return {};
  return *this * leading().inverse();
}

Poly Poly::inflate(int n) const {
  if (n == 1 || c_.empty()) return *this;
  std::vector<Rational> v(static_cast<std::size_t>(degree() * n) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * n] = c_[i];
  return Poly(std::move(v));
}

std::optional<Poly> Poly::deflate(int n) const {
  if (n == 1 || c_.empty()) return *this;
  std::vector<Rational> v(static_cast<std::size_t>(degree() / n) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (i % n != 0) return std::nullopt;
    v[i / n] = c_[i];
  }
  return Poly(std::move(v));
}

Poly Poly::shift_up(int k) const {
  if (c_.empty() || k == 0) return *this;
  std::vector<Rational> v(static_cast<std::size_t>(k), Rational(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

Poly Poly::shift_down(int k) const {
  if (c_.empty() || k == 0) return *this;
  for (int i = 0; i < k && i <= degree(); ++i)
    if (!c_[static_cast<std::size_t>(i)].is_zero())
      fail(ErrorKind::kDomain, "shift_down: polynomial not divisible by x^k");
  if (k > degree()) return {};
  return Poly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

Poly Poly::pow(int e) const {
  Poly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly(*it);
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  strip();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  strip();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

std::string Poly::str(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Rational a = c.abs();
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.str();
      continue;
    }
    if (!a.is_one()) os << a.str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorKind::kDomain, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  Rational inv = b.leading().inverse();
  const auto& bc = b.coeffs();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    Rational t = r[static_cast<std::size_t>(i + b.degree())] * inv;
    if (t.is_zero()) continue;
    q[static_cast<std::size_t>(i)] = t;
    for (int j = 0; j <= b.degree(); ++j)
      r[static_cast<std::size_t>(i + j)] -= t * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(std::max(b.degree(), 0)));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail(ErrorKind::kDomain, "inexact polynomial division");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // x-power fast path; frequent for Laurent data
  if (a.is_monomial() || b.is_monomial()) {
    const Poly& m = a.is_monomial() ? a : b;
    const Poly& o = a.is_monomial() ? b : a;
    return Poly::monomial(Rational(1), std::min(m.degree(), o.valuation()));
  }
  Poly u = a.monic(), v = b.monic();
  while (!v.is_zero()) {
    Poly r = divmod(u, v).second;
    u = std::move(v);
    v = r.monic();
  }
  return u;
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return exact_quotient(a * b, gcd(a, b)).monic();
}

}  // namespace bispec
