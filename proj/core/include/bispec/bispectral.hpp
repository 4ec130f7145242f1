#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bispec/darboux.hpp"
#include "bispec/linalg.hpp"

namespace bispec {

// Image of (P, g) or (Q, f) under the bispectral involution. `raw` is the
// literal formula; `op`/`poly` drop common factors L_beta (on the right of
// P_b, on the left of Q_b) paired with z^N in the polynomial.
struct Involution {
  DiffOp op;
  Poly poly;
  DiffOp raw_op;
  Poly raw_poly;
  int stripped = 0;  // number of L_beta factors removed
};

Involution involute_P(const DiffOp& P, const Poly& g, const BesselIndex& beta);
Involution involute_Q(const DiffOp& Q, const Poly& f, const BesselIndex& beta);

// L Psi_W = h(z^N) Psi_W and Lambda Psi_W = Theta(x^N) Psi_W with
// Psi_W = P Psi_beta / g(z).
struct BispectralPair {
  DarbouxCertificate cert;
  Involution Pb, Qb;
  DiffOp L;       // in x
  DiffOp Lambda;  // in z
  Poly h;         // polynomial in w = z^N
  Poly Theta;     // polynomial in w = x^N
};

BispectralPair make_pair(const DarbouxCertificate& cert);

struct VerifyReport {
  int depth = 0;
  Window window_L, window_Lambda;  // windows on which both residuals vanish
  int coefficients_checked = 0;
};

// Truncation error if a window is empty, verification error on a nonzero residual.
VerifyReport verify_pair(const BispectralPair& pair, int depth = 0);

// Closed formulas for a log-free monomial kernel f_k = sum_i a_ki x^gamma_i,
// gamma = beta^d. Normalized so that S(z) = sum det A^I Delta_I z^p_I is monic.
struct ClosedForm {
  std::vector<Rational> gamma;
  std::vector<std::vector<int>> subsets;  // I with det A^I Delta_I != 0
  std::vector<int> i_min;
  Poly S;                                 // in z
  DiffOp P, Q, Pb, Qb;
  Poly f, g, fb, gb;
};

ClosedForm closed_form_monomial(const BesselIndex& beta, int d,
                                const linalg::Matrix<Rational>& A);

// Removes right factors L_beta from (P_b, g_b) (left factors for Q_b).
Involution strip_right(DiffOp op, Poly poly, const BesselIndex& beta);
Involution strip_left(DiffOp op, Poly poly, const BesselIndex& beta);

struct SpectralAlgebraReport {
  int degree_bound = 0;
  std::vector<int> degrees;         // z-degrees N e of monic u in A_W, 1 <= e
  std::vector<Poly> witnesses;      // u(w) for each degree
  std::vector<int> generators;      // minimal generators of the degree semigroup
  int rank = 0;                     // gcd of the degrees
  // When P has order 0 (W = V_beta), generators and rank include non_lattice.
  std::vector<int> non_lattice;     // m not divisible by N with z^m in A_{V_beta}
  bool generic = true;              // non_lattice is empty up to the bound
};

// Degrees e with a monic u of degree e such that P u(L_beta) = A P for some
// operator A (division certificate).
SpectralAlgebraReport spectral_algebra(const DiffOp& P, const BesselIndex& beta,
                                       int degree_bound);
// Same search through the kernel action on the kernel generators of a normalized kernel spec.
std::vector<int> spectral_degrees_from_kernel(const NormalizedSpec& spec, int degree_bound);
// m with z^m in A_{V_beta}, m not divisible by N, m <= bound.
std::vector<int> non_lattice_degrees(const BesselIndex& beta, int bound);

struct BetaPrime {
  std::vector<Rational> beta_prime;
  std::vector<int> counts;          // n_s
  std::vector<int> association;     // element -> s (0-based)
  bool ambiguous = false;           // another representative choice exists
};

// Kernel elements must be log-free quasi-polynomials.
BetaPrime beta_prime(const BesselIndex& beta, const std::vector<QuasiPolynomial>& kernel);

}  // namespace bispec
