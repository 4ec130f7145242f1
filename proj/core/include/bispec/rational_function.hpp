#pragma once

#include <optional>
#include <string>

#include "bispec/poly.hpp"

namespace bispec {

// num/den in lowest terms with den monic. Canonical, so == is structural.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Poly num);
  RationalFunction(const Rational& c) : RationalFunction(Poly(c)) {}
  template <std::integral T>
  RationalFunction(T c) : RationalFunction(Poly(Rational(c))) {}
  RationalFunction(const Poly& num, const Poly& den);

  // c * x^k for any integer k.
  static RationalFunction monomial(const Rational& c, int k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
  bool is_polynomial() const { return den_.degree() == 0; }
  // Poles only at 0: den = x^m.
  bool is_laurent() const { return den_.is_monomial(); }
  // Exponent of the x^m denominator of a Laurent function.
  int laurent_shift() const { return den_.degree(); }
  Rational constant_value() const;

  RationalFunction derivative() const;
  // x * d/dx.
  RationalFunction euler() const;
  RationalFunction inverse() const;
  RationalFunction pow(int e) const;
  // f(x^n).
  RationalFunction inflate(int n) const;
  // Returns g with g(x^n) = f, if f is a function of x^n.
  std::optional<RationalFunction> deflate(int n) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) {
    return *this = *this + o;
  }
  RationalFunction& operator-=(const RationalFunction& o) {
    return *this = *this - o;
  }
  RationalFunction& operator*=(const RationalFunction& o) {
    return *this = *this * o;
  }
  friend bool operator==(const RationalFunction&,
                         const RationalFunction&) = default;

  std::string str(std::string_view var = "x") const;

 private:
  struct Raw {};
  RationalFunction(Raw, Poly num, Poly den)
      : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly num_;
  Poly den_;
};

}  // namespace bispec
