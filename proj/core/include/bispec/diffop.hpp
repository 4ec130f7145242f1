#pragma once

#include <string>
#include <vector>

#include "bispec/poly.hpp"
#include "bispec/rational_function.hpp"

namespace bispec {

// Coordinate form of an ordinary differential operator: coefficients of
// d^k (kDel) or of D^k with D = x d (kEuler), coefficients on the left.
enum class Form { kDel, kEuler };

const char* to_string(Form f);

// A = sum_k c_k(v) B^k, B = d_v or v*d_v, v the variable tag ('x' or 'z').
// Canonical: trailing zero coefficients stripped, coefficients reduced.
class DiffOp {
 public:
  explicit DiffOp(Form form = Form::kDel, char var = 'x');
  DiffOp(Form form, std::vector<RationalFunction> coeffs, char var = 'x');

  static DiffOp scalar(const RationalFunction& f, Form form = Form::kDel,
                       char var = 'x');
  static DiffOp identity(Form form = Form::kDel, char var = 'x') {
    return scalar(RationalFunction(1), form, var);
  }
  // d_v in del form.
  static DiffOp del(char var = 'x');
  // v d_v in Euler form.
  static DiffOp euler(char var = 'x');
  // D-form operator p(D) with constant coefficients.
  static DiffOp polynomial_in_euler(const Poly& p, char var = 'x');

  Form form() const { return form_; }
  char var() const { return var_; }
  // -1 for the zero operator.
  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<RationalFunction>& coeffs() const { return c_; }
  RationalFunction coeff(int k) const;
  const RationalFunction& leading() const;

  DiffOp in(Form target) const;
  DiffOp with_var(char var) const;
  DiffOp adjoint() const;
  bool has_laurent_coefficients() const;

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  // Composition; the result has the form of the left factor.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  // Left multiplication by a function: (f A)(u) = f * A(u).
  friend DiffOp operator*(const RationalFunction& f, const DiffOp& a);
  friend bool operator==(const DiffOp& a, const DiffOp& b);

  std::string str() const;

 private:
  void strip();
  Form form_;
  char var_;
  std::vector<RationalFunction> c_;
};

// Composition computed entirely in the given form (independent expansion
// paths for cross-checks).
DiffOp multiply_in(Form form, const DiffOp& a, const DiffOp& b);

struct Division {
  DiffOp quotient;
  DiffOp remainder;
};

// a = q * p + r with order(r) < order(p).
Division left_divide(const DiffOp& a, const DiffOp& p);
// a = p * q + r with order(r) < order(p).
Division right_divide(const DiffOp& a, const DiffOp& p);

// h(L) by Horner's rule.
DiffOp evaluate(const Poly& h, const DiffOp& op);
DiffOp power(const DiffOp& op, int e);

// Monic lcm of the coefficient denominators: den * A has polynomial
// coefficients.
Poly left_denominator(const DiffOp& a);
// Scales A on the left so every coefficient is Laurent, dropping only the
// non-x-power parts of the denominators. Returns the multiplier too.
std::pair<DiffOp, Poly> clear_to_laurent(const DiffOp& a);

}  // namespace bispec
