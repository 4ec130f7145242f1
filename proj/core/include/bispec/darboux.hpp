#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bispec/bessel.hpp"

namespace bispec {

// One group of kernel elements supported at 0: the seed
//   f = sum_{k,j} b[k][j] x^(beta_i + kN) y^j
// (or an explicit quasi-polynomial seed) together with d^l f / dy^l for
// 0 <= l <= j0, y = ln x.
struct AtZeroGroup {
  int base_index = -1;                       // i, 0-based
  std::vector<std::vector<Rational>> b;      // b[k][j]
  std::optional<QuasiPolynomial> terms;      // explicit seed instead of b
  std::optional<int> j0;                     // checked against the seed if given
};

// sum_k a_k D_z^k Psi_beta(x, z) at z = eps^i lambda, for every branch i.
struct AtPointGroup {
  Rational lambda;
  std::vector<Rational> a;
};

struct KernelSpec {
  BesselIndex beta;
  std::vector<AtZeroGroup> at_zero;
  std::vector<AtPointGroup> at_points;
};

// Point groups collected by the value lambda^N.
struct PointClass {
  Rational lambda;     // representative (first group seen; |lambda| for even N)
  Rational lambda_N;
  int groups = 0;      // n_j
  int max_jet = 0;     // max k0 over the groups
  int depth = 0;       // exponent d_j of (w - lambda^N) in h
};

struct NormalizedSpec {
  KernelSpec spec;
  std::vector<QuasiPolynomial> zero_elements;  // at-zero basis, groups expanded
  std::vector<PointClass> classes;
  int n0 = 0;
  int n = 0;          // order of P
  Poly g;             // z^n0 prod (z^N - lambda_j^N)^n_j
  HFactorization h_factors;
  Poly h;             // in w = z^N
  Poly f;             // h(z^N) / g(z)
  bool log_free = true;
  bool monomial() const { return spec.at_points.empty(); }
};

NormalizedSpec validate_spec(const KernelSpec& spec);

// Coefficients of P = x^-n / p_n(x^N) * sum_k p_k(x^N) D^k with polynomial
// p_k, p_n monic and the p_k without a common factor.
struct LeftNormalForm {
  int n = 0;
  std::vector<Poly> p;  // p[k], polynomials in w = x^N
};
LeftNormalForm left_normal_form(const DiffOp& P, int N);

// Q = sum_s D^s q_s(x^N) / (x^m q_m(x^N)) with q_m monic, no common factor.
struct RightNormalForm {
  int m = 0;
  std::vector<Poly> q;
};
RightNormalForm right_normal_form(const DiffOp& Q, int N);

// Coefficients r_s of A = sum_s D^s r_s (functions on the right), Euler form.
std::vector<RationalFunction> right_coefficients(const DiffOp& a);

DiffOp build_P_monomial(const NormalizedSpec& spec);

struct BuildOptions {
  int depth = 0;              // 0: default_depth
  int max_degree_bound = 256;
  int max_depth = 400;
};

struct BuildStats {
  int degree_bound = 0;       // final max deg p_k
  int depth = 0;              // series depth used
  int equations = 0;
  int unknowns = 0;
};

DiffOp build_P_general(const NormalizedSpec& spec, const BuildOptions& opts = {},
                       BuildStats* stats = nullptr);

// Left quotient of h(L_beta) by P; certification error if the remainder is nonzero.
DiffOp compute_Q(const DiffOp& P, const Poly& h, const BesselIndex& beta);

struct Witnesses {
  bool qp_equals_h = false;        // QP = h(L_beta)
  bool qp_cross_checked = false;   // same identity via the other multiplication path
  bool fg_equals_h = false;        // f g = h(z^N)
  bool p_normal_form = false;      // P = x^-n sum p_k(x^N)/p_n(x^N) D^k
  bool g_product_form = false;     // g = z^n0 G(z^N), deg g = n
  bool g_matches_spec = false;     // g equals the value computed from the kernel
  bool normalized = false;         // lim e^{-xz} Psi_W = 1 on the series window
  int normalization_window = 0;    // number of z-powers checked
};

struct DarbouxCertificate {
  BesselIndex beta;
  DiffOp P, Q;
  Poly f, g, h;
  int depth = 0;
  Witnesses witnesses;
};

// K = 2 (dN + n) + 8.
int default_depth(int N, int deg_h, int n);

// Runs every check; a failing check throws a certification error naming it.
DarbouxCertificate certify(const BesselIndex& beta, const DiffOp& P, const DiffOp& Q,
                           const Poly& f, const Poly& g,
                           const std::optional<Poly>& expected_g = std::nullopt,
                           int depth = 0);

struct BuildResult {
  NormalizedSpec spec;
  DarbouxCertificate certificate;
  BuildStats stats;
};

BuildResult build(const KernelSpec& spec, const BuildOptions& opts = {});

// Applies P to every kernel generator: exact at 0, to the series window at
// the points. True iff every image vanishes.
bool annihilates_kernel(const DiffOp& P, const NormalizedSpec& spec, int depth);

}  // namespace bispec
