#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bispec/rational.hpp"

namespace bispec {

// Dense univariate polynomial over Q, coefficients low degree first.
// Trailing zeros are stripped; the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(const Rational& c);
  template <std::integral T>
  Poly(T c) : Poly(Rational(c)) {}

  static Poly monomial(const Rational& c, int degree);
  static Poly x() { return monomial(Rational(1), 1); }
  // Monic polynomial with the given roots: prod (x - r).
  static Poly from_roots(const std::vector<Rational>& roots);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const;
  // Smallest exponent with a nonzero coefficient, -1 for zero.
  int valuation() const;
  bool is_monomial() const;
  bool is_constant() const { return degree() <= 0; }

  Rational eval(const Rational& t) const;
  Poly derivative() const;
  Poly monic() const;
  Poly inflate(int n) const;
  std::optional<Poly> deflate(int n) const;
  Poly shift_up(int k) const;
  // Exact division by x^k; the low k coefficients must vanish.
  Poly shift_down(int k) const;
  Poly pow(int e) const;
  Poly compose(const Poly& inner) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly&, const Poly&) = default;

  std::string str(std::string_view var = "x") const;

 private:
  void strip();
  std::vector<Rational> c_;
};

// a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly exact_quotient(const Poly& a, const Poly& b);
// Monic gcd; gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

}  // namespace bispec
