#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bispec/poly.hpp"
#include "bispec/rational.hpp"

namespace bispec {

int euler_phi(int n);
// N-th cyclotomic polynomial, integer coefficients.
Poly cyclotomic_polynomial(int n);

class CyclotomicScalar;

// Q(eps) with eps = exp(2 pi i / N), represented as Q[z] / Phi_N.
class CyclotomicField : public std::enable_shared_from_this<CyclotomicField> {
 public:
  static std::shared_ptr<const CyclotomicField> make(int order);

  int order() const { return order_; }
  int degree() const { return modulus_.degree(); }
  const Poly& modulus() const { return modulus_; }

  CyclotomicScalar zero() const;
  CyclotomicScalar one() const;
  CyclotomicScalar from(const Rational& r) const;
  // eps itself: eps^N = 1 and eps^k != 1 for 0 < k < N.
  CyclotomicScalar primitive_root() const;
  CyclotomicScalar from_poly(const Poly& p) const;

  struct Private {};
  CyclotomicField(Private, int order);

 private:
  int order_;
  Poly modulus_;
};

// An element of Q(eps); immutable value sharing its field descriptor.
class CyclotomicScalar {
 public:
  CyclotomicScalar(std::shared_ptr<const CyclotomicField> field, Poly residue);

  int order() const { return field_->order(); }
  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
  // Coordinates in the power basis 1, eps, ..., eps^(phi(N)-1).
  std::vector<Rational> coords() const;
  const Poly& residue() const { return residue_; }

  bool is_zero() const { return residue_.is_zero(); }
  bool is_rational() const { return residue_.degree() <= 0; }
  Rational to_rational() const;

  CyclotomicScalar inverse() const;
  CyclotomicScalar pow(long e) const;

  CyclotomicScalar operator-() const;
  friend CyclotomicScalar operator+(const CyclotomicScalar& a,
                                    const CyclotomicScalar& b);
  friend CyclotomicScalar operator-(const CyclotomicScalar& a,
                                    const CyclotomicScalar& b);
  friend CyclotomicScalar operator*(const CyclotomicScalar& a,
                                    const CyclotomicScalar& b);
  friend CyclotomicScalar operator*(const CyclotomicScalar& a,
                                    const Rational& s);
  friend CyclotomicScalar operator/(const CyclotomicScalar& a,
                                    const CyclotomicScalar& b) {
    return a * b.inverse();
  }
  friend bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b);

  std::string str() const;

 private:
  std::shared_ptr<const CyclotomicField> field_;
  Poly residue_;
};

}  // namespace bispec
