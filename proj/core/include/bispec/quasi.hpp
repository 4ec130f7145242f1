#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bispec/cyclotomic.hpp"
#include "bispec/diffop.hpp"
#include "bispec/rational.hpp"

namespace bispec {

// Finite sum of c * x^gamma * (ln x)^j, gamma rational, j >= 0.
class QuasiPolynomial {
 public:
  using Key = std::pair<Rational, int>;  // (gamma, log power)

  QuasiPolynomial() = default;
  static QuasiPolynomial monomial(const Rational& c, const Rational& gamma,
                                  int log_power = 0);

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_log_free() const;
  int max_log_power() const;
  Rational coeff(const Rational& gamma, int log_power) const;
  void add_term(const Rational& c, const Rational& gamma, int log_power);

  // x d/dx.
  QuasiPolynomial euler() const;
  // d/dy with y = ln x held as an independent symbol.
  QuasiPolynomial log_derivative() const;
  QuasiPolynomial times_power(int shift) const;
  // Multiplication by a Laurent polynomial; UnsupportedInput otherwise.
  QuasiPolynomial times(const RationalFunction& laurent) const;

  QuasiPolynomial operator-() const;
  QuasiPolynomial& operator+=(const QuasiPolynomial& o);
  QuasiPolynomial& operator-=(const QuasiPolynomial& o);
  friend QuasiPolynomial operator+(QuasiPolynomial a, const QuasiPolynomial& b) {
    return a += b;
  }
  friend QuasiPolynomial operator-(QuasiPolynomial a, const QuasiPolynomial& b) {
    return a -= b;
  }
  friend QuasiPolynomial operator*(const Rational& s, const QuasiPolynomial& q);
  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

  std::string str() const;

 private:
  std::map<Key, Rational> terms_;
};

// Image A q. A must have Laurent coefficients (poles only at 0).
QuasiPolynomial apply(const DiffOp& a, const QuasiPolynomial& q);

// Guaranteed-exact coefficient window of a truncated series: every
// coefficient (i, j) with min_x <= i <= max_x and min_z <= j <= max_z is
// exact; coefficients above max_* are zero; nothing is known below min_*.
struct Window {
  int min_x = 0, max_x = 0, min_z = 0, max_z = 0;
  bool empty() const { return min_x > max_x || min_z > max_z; }
  bool contains(int i, int j) const {
    return i >= min_x && i <= max_x && j >= min_z && j <= max_z;
  }
  friend bool operator==(const Window&, const Window&) = default;
};

// e^{xz} * sum c_ij x^i z^j, truncated to a window.
class WaveSeries {
 public:
  using Key = std::pair<int, int>;

  WaveSeries() = default;
  WaveSeries(Window window, std::map<Key, Rational> coeffs);

  // e^{xz}(1 + sum_{k=1..K} a_k (xz)^-k) for coeffs = {1, a_1, ..., a_K}.
  static WaveSeries diagonal(const std::vector<Rational>& coeffs);

  const Window& window() const { return window_; }
  const std::map<Key, Rational>& coeffs() const { return c_; }
  Rational coeff(int i, int j) const;

  // A acting in the variable A.var(); A must have Laurent coefficients.
  WaveSeries apply(const DiffOp& a) const;
  // Multiply by a Laurent polynomial in var.
  WaveSeries times(const RationalFunction& laurent, char var) const;

  // Restricts to the common window.
  friend WaveSeries operator+(const WaveSeries& a, const WaveSeries& b);
  friend WaveSeries operator-(const WaveSeries& a, const WaveSeries& b);
  WaveSeries operator-() const;

  // First nonzero coefficient inside the window (by i+j descending).
  std::optional<std::pair<Key, Rational>> first_nonzero() const;
  bool is_zero() const { return c_.empty(); }
  // Window restricted copy; inner must lie within window().
  WaveSeries restrict_to(const Window& inner) const;

 private:
  WaveSeries step(char var) const;
  void prune();

  Window window_;
  std::map<Key, Rational> c_;
};

// e^{c x} * sum_e s_e x^e with cyclotomic coefficients, exact on
// [valid_min, max_degree].
class ExpSeries {
 public:
  ExpSeries(CyclotomicScalar rate, int valid_min, int max_degree,
            std::map<int, CyclotomicScalar> coeffs);

  const CyclotomicScalar& rate() const { return rate_; }
  int valid_min() const { return valid_min_; }
  int max_degree() const { return max_; }
  const std::map<int, CyclotomicScalar>& coeffs() const { return s_; }
  CyclotomicScalar coeff(int e) const;

  // D applied to e^{cx} S: e^{cx} (c x + D) S.
  ExpSeries euler_step() const;
  ExpSeries apply(const DiffOp& a) const;
  ExpSeries times(const RationalFunction& laurent) const;
  ExpSeries scaled(const Rational& s) const;
  friend ExpSeries operator+(const ExpSeries& a, const ExpSeries& b);

 private:
  void prune();
  CyclotomicScalar rate_;
  int valid_min_, max_;
  std::map<int, CyclotomicScalar> s_;
};

// D_z^k Psi_beta(x, z) at z = eps^branch * lambda for k = 0..jets.size()-1.
struct PointJet {
  Rational lambda;
  int branch = 0;
  int depth = 0;
  std::vector<ExpSeries> jets;
};

}  // namespace bispec
