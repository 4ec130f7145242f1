#include "bispec/rational_function.hpp"

#include <algorithm>

#include "bispec/error.hpp"

namespace bispec {

RationalFunction::RationalFunction(Poly num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(const Poly& num, const Poly& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) fail(ErrorKind::kDomain, "rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      if (g.is_monomial()) {
        num_ = num_.shift_down(g.degree());
        den_ = den_.shift_down(g.degree());
      } else {
        num_ = exact_quotient(num_, g);
        den_ = exact_quotient(den_, g);
      }
    }
  }
  Rational lc = den_.leading();
  if (!lc.is_one()) {
    Rational inv = lc.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::monomial(const Rational& c, int k) {
  if (k >= 0 || c.is_zero()) return RationalFunction(Poly::monomial(c, std::max(k, 0)));
  return RationalFunction(Raw{}, Poly(c), Poly::monomial(Rational(1), -k));
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) fail(ErrorKind::kUsage, "not a constant: " + str());
  return num_.coeff(0);
}

RationalFunction RationalFunction::derivative() const {
  if (is_polynomial()) return RationalFunction(num_.derivative() * den_.leading().inverse());
  if (den_.is_monomial()) {
    // (n x^-m)' = (x n' - m n) x^(-m-1)
    int m = den_.degree();
    Poly top = num_.derivative().shift_up(1) - num_ * Rational(m);
    return RationalFunction(top, den_.shift_up(1));
  }
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                          den_ * den_);
}

RationalFunction RationalFunction::euler() const {
  if (is_polynomial()) {
    Poly p = num_.derivative().shift_up(1);
    return RationalFunction(p);
  }
  if (den_.is_monomial()) {
    int m = den_.degree();
    Poly top = num_.derivative().shift_up(1) - num_ * Rational(m);
    return RationalFunction(top, den_);
  }
  Poly top = (num_.derivative() * den_ - num_ * den_.derivative()).shift_up(1);
  return RationalFunction(top, den_ * den_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) fail(ErrorKind::kDomain, "inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RationalFunction(Raw{}, num_.pow(e), den_.pow(e));
}

RationalFunction RationalFunction::inflate(int n) const {
  return RationalFunction(Raw{}, num_.inflate(n), den_.inflate(n));
}

std::optional<RationalFunction> RationalFunction::deflate(int n) const {
  auto a = num_.deflate(n);
  auto b = den_.deflate(n);
  if (!a || !b) return std::nullopt;
  return RationalFunction(Raw{}, *a, *b);
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(Raw{}, -num_, den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  if (a.den_.is_monomial() && b.den_.is_monomial()) {
    int ma = a.den_.degree(), mb = b.den_.degree();
    int m = std::max(ma, mb);
    return RationalFunction(a.num_.shift_up(m - ma) + b.num_.shift_up(m - mb),
                            Poly::monomial(Rational(1), m));
  }
  Poly g = gcd(a.den_, b.den_);
  Poly ca = exact_quotient(b.den_, g), cb = exact_quotient(a.den_, g);
  return RationalFunction(a.num_ * ca + b.num_ * cb, a.den_ * ca);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial())
    return RationalFunction(RationalFunction::Raw{}, a.num_ * b.num_, Poly(1));
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

std::string RationalFunction::str(std::string_view var) const {
  if (is_polynomial()) return num_.str(var);
  if ((num_.degree() == 0 || num_.is_monomial()) && num_.leading().sign() < 0)
    return "-" + RationalFunction(-num_, den_).str(var);
  std::string n = num_.str(var), d = den_.str(var);
  bool simple_num = (num_.degree() == 0 || num_.is_monomial()) &&
                    n.find('/') == std::string::npos;
  return (simple_num ? n : "(" + n + ")") + "/" +
         (den_.is_monomial() ? d : "(" + d + ")");
}

}  // namespace bispec
