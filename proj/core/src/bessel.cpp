#include "bispec/bessel.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bispec/error.hpp"

namespace bispec {

BesselIndex BesselIndex::make(std::vector<Rational> beta) {
  if (beta.empty()) fail(ErrorKind::kUsage, "Bessel index must be non-empty");
  const int n = static_cast<int>(beta.size());
  Rational sum;
  for (const auto& b : beta) sum += b;
  if (sum != Rational(n * (n - 1), 2))
    fail(ErrorKind::kUsage, "normalization violated: sum of beta is " + sum.str() +
                                ", expected " + Rational(n * (n - 1), 2).str());
  return BesselIndex{n, std::move(beta)};
}

std::string BesselIndex::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < beta.size(); ++i) os << (i ? ", " : "") << beta[i];
  os << ")";
  return os.str();
}

Poly index_polynomial(const std::vector<Rational>& gamma) {
  return Poly::from_roots(gamma);
}

DiffOp bessel_poly(const BesselIndex& beta) {
  return DiffOp::polynomial_in_euler(index_polynomial(beta.beta));
}

DiffOp index_op(const std::vector<Rational>& gamma, char var) {
  const int n = static_cast<int>(gamma.size());
  return RationalFunction::monomial(1, -n) *
         DiffOp::polynomial_in_euler(index_polynomial(gamma), var);
}

DiffOp bessel_op(const BesselIndex& beta, char var) { return index_op(beta.beta, var); }

std::vector<Rational> beta_power(const BesselIndex& beta, int d) {
  if (d < 1) fail(ErrorKind::kUsage, "beta_power needs d >= 1");
  std::vector<Rational> out;
  for (const auto& b : beta.beta)
    for (int l = 0; l < d; ++l) out.push_back(b + Rational(l * beta.N));
  return out;
}

std::vector<Rational> wave_coeffs(const BesselIndex& beta, int depth) {
  if (depth < 0) fail(ErrorKind::kUsage, "negative depth");
  const int N = beta.N;
  // e^{-z} P_beta(D) e^z = P_beta(D + z), expanded as sum_k c_k(z) D^k.
  DiffOp shifted = DiffOp::identity(Form::kEuler, 'z');
  for (const auto& b : beta.beta)
    shifted = shifted * DiffOp(Form::kEuler, {RationalFunction(Poly(std::vector<Rational>{-b, Rational(1)})),
                                              RationalFunction(1)}, 'z');
  // e_s(m): coefficient of z^s when applied to z^-m, i.e. sum_k c_{k,s} (-m)^k.
  std::vector<Poly> e(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= shifted.order(); ++k) {
    const RationalFunction& c = shifted.coeffs()[static_cast<std::size_t>(k)];
    if (!c.is_polynomial()) fail(ErrorKind::kDomain, "shifted Bessel polynomial");
    for (int s = 0; s <= c.num().degree(); ++s) {
      if (s > N) fail(ErrorKind::kDomain, "shifted Bessel polynomial degree");
      // (-m)^k as a polynomial in m
      e[static_cast<std::size_t>(s)] +=
          Poly::monomial(c.num().coeff(s) * Rational(k % 2 ? -1 : 1), k);
    }
  }
  if (e[static_cast<std::size_t>(N)] != Poly(1))
    fail(ErrorKind::kDomain, "leading term of P_beta(D + z) is not z^N");
  const Poly& lead = e[static_cast<std::size_t>(N - 1)];
  if (!lead.eval(Rational(0)).is_zero())
    fail(ErrorKind::kUsage, "normalization violated in wave recursion");

  std::vector<Rational> a(static_cast<std::size_t>(depth) + 1);
  a[0] = Rational(1);
  // Coefficient of z^{N-1-r}: sum_{s<N} e_s(m) a_m with m = s - (N-1) + r.
  for (int r = 1; r <= depth; ++r) {
    Rational rhs;
    for (int s = 0; s < N - 1; ++s) {
      int m = s - (N - 1) + r;
      if (m < 0) continue;
      rhs += e[static_cast<std::size_t>(s)].eval(Rational(m)) * a[static_cast<std::size_t>(m)];
    }
    Rational pivot = lead.eval(Rational(r));
    if (pivot.is_zero()) fail(ErrorKind::kDomain, "singular wave recursion at k=" + std::to_string(r));
    a[static_cast<std::size_t>(r)] = -rhs / pivot;
  }
  return a;
}

WaveSeries bessel_wave(const BesselIndex& beta, int depth) {
  return WaveSeries::diagonal(wave_coeffs(beta, depth));
}

namespace {

// Lattice offsets l_j >= 0 with gamma = beta_j + l_j N, sorted.
std::vector<long> lattice_offsets(const BesselIndex& beta, const Rational& gamma) {
  std::vector<long> out;
  for (const auto& b : beta.beta) {
    Rational q = (gamma - b) / Rational(beta.N);
    if (q.is_integer() && q.sign() >= 0) out.push_back(q.to_long());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int multiplicity(const BesselIndex& beta, const Rational& gamma) {
  return static_cast<int>(lattice_offsets(beta, gamma).size());
}

int count_equal(const std::vector<Rational>& gamma, const Rational& value) {
  return static_cast<int>(std::count(gamma.begin(), gamma.end(), value));
}

int annihilating_power(const BesselIndex& beta, const Rational& gamma, int log_power) {
  auto offs = lattice_offsets(beta, gamma);
  if (log_power < 0 || log_power >= static_cast<int>(offs.size())) return -1;
  return static_cast<int>(offs[static_cast<std::size_t>(log_power)]) + 1;
}

PointJet wave_jet_at(const BesselIndex& beta, const Rational& lambda, int branch,
                     int jet_order, int depth) {
  if (lambda.is_zero())
    fail(ErrorKind::kUsage, "point jets need lambda != 0; use quasi-polynomials at 0");
  if (branch < 0 || branch >= beta.N) fail(ErrorKind::kUsage, "branch index out of range");
  auto field = CyclotomicField::make(beta.N);
  CyclotomicScalar point = field->primitive_root().pow(branch) * lambda;
  CyclotomicScalar inv = point.inverse();
  auto a = wave_coeffs(beta, depth);
  std::map<int, CyclotomicScalar> c;
  CyclotomicScalar p = field->one();
  for (int m = 0; m <= depth; ++m) {
    if (m > 0) p = p * inv;
    if (!a[static_cast<std::size_t>(m)].is_zero())
      c.emplace(-m, p * a[static_cast<std::size_t>(m)]);
  }
  PointJet jet{lambda, branch, depth, {}};
  jet.jets.emplace_back(point, -depth, 0, std::move(c));
  for (int k = 1; k <= jet_order; ++k) jet.jets.push_back(jet.jets.back().euler_step());
  return jet;
}

Poly h_polynomial(const HFactorization& h, int N) {
  Poly p = Poly::monomial(Rational(1), h.d0);
  for (const auto& [lambda, d] : h.points)
    p = p * Poly(std::vector<Rational>{-lambda.pow(N), Rational(1)}).pow(d);
  return p;
}

KernelBasis kernel_basis_h(const BesselIndex& beta, const HFactorization& h, int depth) {
  std::vector<Rational> seen;
  for (const auto& [lambda, d] : h.points) {
    if (lambda.is_zero()) fail(ErrorKind::kUsage, "point lambda must be nonzero");
    Rational p = lambda.pow(beta.N);
    if (std::find(seen.begin(), seen.end(), p) != seen.end())
      fail(ErrorKind::kUsage, "repeated lambda^N value " + p.str());
    seen.push_back(p);
  }
  KernelBasis kb;
  if (h.d0 > 0) {
    auto gamma = beta_power(beta, h.d0);
    std::vector<Rational> distinct = gamma;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const auto& g : distinct)
      for (int j = 0; j < count_equal(gamma, g); ++j)
        kb.at_zero.push_back(QuasiPolynomial::monomial(1, g, j));
  }
  for (const auto& [lambda, d] : h.points)
    for (int i = 0; i < beta.N; ++i)
      if (d > 0) kb.at_points.push_back(wave_jet_at(beta, lambda, i, d - 1, depth));
  return kb;
}

}  // namespace bispec
