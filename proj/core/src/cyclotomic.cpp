#include "bispec/cyclotomic.hpp"

#include "bispec/error.hpp"

namespace bispec {

int euler_phi(int n) {
  if (n < 1) fail(ErrorKind::kUsage, "euler_phi of non-positive integer");
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

Poly cyclotomic_polynomial(int n) {
  if (n < 1) fail(ErrorKind::kUsage, "cyclotomic polynomial of order < 1");
  Poly p = Poly::monomial(Rational(1), n) - Poly(1);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = exact_quotient(p, cyclotomic_polynomial(d));
  return p;
}

CyclotomicField::CyclotomicField(Private, int order)
    : order_(order), modulus_(cyclotomic_polynomial(order)) {}

std::shared_ptr<const CyclotomicField> CyclotomicField::make(int order) {
  if (order < 1) fail(ErrorKind::kUsage, "cyclotomic order must be positive");
  return std::make_shared<const CyclotomicField>(Private{}, order);
}

CyclotomicScalar CyclotomicField::zero() const { return from(Rational(0)); }
CyclotomicScalar CyclotomicField::one() const { return from(Rational(1)); }

CyclotomicScalar CyclotomicField::from(const Rational& r) const {
  return CyclotomicScalar(shared_from_this(), Poly(r));
}

CyclotomicScalar CyclotomicField::primitive_root() const {
  return CyclotomicScalar(shared_from_this(), Poly::x());
}

CyclotomicScalar CyclotomicField::from_poly(const Poly& p) const {
  return CyclotomicScalar(shared_from_this(), p);
}

CyclotomicScalar::CyclotomicScalar(std::shared_ptr<const CyclotomicField> field,
                                   Poly residue)
    : field_(std::move(field)),
      residue_(divmod(residue, field_->modulus()).second) {}

std::vector<Rational> CyclotomicScalar::coords() const {
  std::vector<Rational> v(static_cast<std::size_t>(field_->degree()));
  for (int i = 0; i <= residue_.degree(); ++i)
    v[static_cast<std::size_t>(i)] = residue_.coeff(i);
  return v;
}

Rational CyclotomicScalar::to_rational() const {
  if (!is_rational())
    fail(ErrorKind::kUsage, "cyclotomic scalar is not rational: " + str());
  return residue_.coeff(0);
}

namespace {

void check_same(const CyclotomicScalar& a, const CyclotomicScalar& b) {
  if (a.order() != b.order())
    fail(ErrorKind::kUsage, "mismatched cyclotomic orders " +
                                std::to_string(a.order()) + " and " +
                                std::to_string(b.order()));
}

}  // namespace

CyclotomicScalar CyclotomicScalar::inverse() const {
  if (is_zero()) fail(ErrorKind::kDomain, "inverse of zero cyclotomic scalar");
  // Extended Euclid: s*residue + t*modulus = 1.
  Poly r0 = field_->modulus(), r1 = residue_;
  Poly s0, s1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since Phi_N is irreducible.
  return CyclotomicScalar(field_, s0 * r0.leading().inverse());
}

CyclotomicScalar CyclotomicScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicScalar result = field_->one(), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

CyclotomicScalar CyclotomicScalar::operator-() const {
  return CyclotomicScalar(field_, -residue_);
}

CyclotomicScalar operator+(const CyclotomicScalar& a,
                           const CyclotomicScalar& b) {
  check_same(a, b);
  return CyclotomicScalar(a.field_, a.residue_ + b.residue_);
}

CyclotomicScalar operator-(const CyclotomicScalar& a,
                           const CyclotomicScalar& b) {
  check_same(a, b);
  return CyclotomicScalar(a.field_, a.residue_ - b.residue_);
}

CyclotomicScalar operator*(const CyclotomicScalar& a,
                           const CyclotomicScalar& b) {
  check_same(a, b);
  return CyclotomicScalar(a.field_, a.residue_ * b.residue_);
}

CyclotomicScalar operator*(const CyclotomicScalar& a, const Rational& s) {
  return CyclotomicScalar(a.field_, a.residue_ * s);
}

bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b) {
  return a.order() == b.order() && a.residue_ == b.residue_;
}

std::string CyclotomicScalar::str() const { return residue_.str("eps"); }

}  // namespace bispec
