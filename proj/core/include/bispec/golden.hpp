#pragma once

#include <vector>

#include "bispec/bispectral.hpp"

namespace bispec::golden {

// beta = (0), kernel {x}.
KernelSpec rank1_spec();

// N = 2, beta = (1 - nu, nu), kernel Psi(x, +-lambda) + a D Psi(x, +-lambda).
struct Example4 {
  Rational nu, a, lambda;
  Rational mu2;  // (a + 1 - a^2 nu (nu - 1)) / (a^2 lambda^2)
  Rational b;    // -a / (a + 1)
};

Example4 example4(const Rational& nu, const Rational& a, const Rational& lambda);
KernelSpec example4_spec(const Example4& ex);
// P(a, lambda, mu) in terms of lambda^2 and mu^2.
DiffOp example4_P(const Rational& a, const Rational& lambda2, const Rational& mu2);
// p_2, p_1, p_0 of P(a, lambda, mu) as polynomials in w = x^2.
std::vector<Poly> example4_p(const Rational& a, const Rational& lambda2, const Rational& mu2);

// Banded Toeplitz kernel on beta^d (all beta_i congruent mod N, beta^d
// without repeats): Phi_{(k-1)d+j} = mu_kj x^(beta_k + (j-1)N) and
// f_r = sum_k sum_{j<=r+1} t[k][r-j+1] Phi_{(k-1)d+j}, r = 0..d-1.
struct DgEven {
  BesselIndex beta;
  int d = 1;
  std::vector<std::vector<Rational>> t;  // t[k][l], k < N, l < d
};

std::vector<QuasiPolynomial> dg_even_basis(const BesselIndex& beta, int d);
linalg::Matrix<Rational> dg_even_matrix(const DgEven& ex);
KernelSpec dg_even_spec(const DgEven& ex);
// Kernel elements f = sum_i A_ki x^gamma_i from a matrix over beta^d.
KernelSpec monomial_spec(const BesselIndex& beta, int d, const linalg::Matrix<Rational>& A);

}  // namespace bispec::golden
