#pragma once

#include <utility>
#include <vector>

#include "bispec/diffop.hpp"
#include "bispec/quasi.hpp"

namespace bispec {

// beta in Q^N with sum beta_i = N(N-1)/2.
struct BesselIndex {
  int N = 1;
  std::vector<Rational> beta;

  // Validates the normalization; UsageError otherwise.
  static BesselIndex make(std::vector<Rational> beta);
  friend bool operator==(const BesselIndex&, const BesselIndex&) = default;
  std::string str() const;
};

// prod (D - gamma_i) as a polynomial in D.
Poly index_polynomial(const std::vector<Rational>& gamma);
// P_beta(D) as a constant-coefficient Euler-form operator.
DiffOp bessel_poly(const BesselIndex& beta);
// L_beta = x^-N P_beta(D), Euler form.
DiffOp bessel_op(const BesselIndex& beta, char var = 'x');
// L_gamma = x^-n prod (D - gamma_i) for an arbitrary index vector.
DiffOp index_op(const std::vector<Rational>& gamma, char var = 'x');

// beta^d with (L_beta)^d = L_{beta^d}; ordering beta_1, beta_1 + N, ...
std::vector<Rational> beta_power(const BesselIndex& beta, int d);

// {1, a_1, ..., a_K} of Psi_beta(z) = e^z (1 + sum a_k z^-k).
std::vector<Rational> wave_coeffs(const BesselIndex& beta, int depth);
// Psi_beta(x, z) = Psi_beta(xz) to depth K.
WaveSeries bessel_wave(const BesselIndex& beta, int depth);

// #{j : gamma in beta_j + N Z_{>=0}}.
int multiplicity(const BesselIndex& beta, const Rational& gamma);
// #{j : gamma_j == value}.
int count_equal(const std::vector<Rational>& gamma, const Rational& value);
// Smallest d with x^gamma ln^log_power x in ker L_beta^d, or -1 if none.
int annihilating_power(const BesselIndex& beta, const Rational& gamma, int log_power);

// D^k Psi_beta(x, eps^branch lambda), k = 0..jet_order, Psi to depth K.
PointJet wave_jet_at(const BesselIndex& beta, const Rational& lambda, int branch,
                     int jet_order, int depth);

// h(w) = w^d0 prod (w - lambda_i^N)^d_i.
struct HFactorization {
  int d0 = 0;
  std::vector<std::pair<Rational, int>> points;  // (lambda_i, d_i)
};
Poly h_polynomial(const HFactorization& h, int N);

struct KernelBasis {
  std::vector<QuasiPolynomial> at_zero;
  std::vector<PointJet> at_points;
};
// Basis of ker h(L_beta): quasi-polynomials at 0 and point jets.
KernelBasis kernel_basis_h(const BesselIndex& beta, const HFactorization& h, int depth);

}  // namespace bispec
