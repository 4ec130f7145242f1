#include "bispec/golden.hpp"

#include "bispec/error.hpp"

namespace bispec::golden {

KernelSpec rank1_spec() {
  KernelSpec s{BesselIndex::make({Rational(0)}), {}, {}};
  AtZeroGroup g;
  g.base_index = 0;
  g.b = {{Rational(0)}, {Rational(1)}};
  s.at_zero.push_back(g);
  return s;
}

Example4 example4(const Rational& nu, const Rational& a, const Rational& lambda) {
  if (a.is_zero() || a == Rational(-1) || lambda.is_zero())
    fail(ErrorKind::kUsage, "example4 needs a != 0, a != -1, lambda != 0");
  Example4 ex{nu, a, lambda, {}, {}};
  Rational a2 = a * a;
  ex.mu2 = (a + Rational(1) - a2 * nu * (nu - Rational(1))) / (a2 * lambda * lambda);
  if (ex.mu2.is_zero()) fail(ErrorKind::kUsage, "example4 parameters give mu = 0");
  ex.b = -a / (a + Rational(1));
  return ex;
}

KernelSpec example4_spec(const Example4& ex) {
  KernelSpec s{BesselIndex::make({Rational(1) - ex.nu, ex.nu}), {}, {}};
  s.at_points.push_back(AtPointGroup{ex.lambda, {Rational(1), ex.a}});
  return s;
}

std::vector<Poly> example4_p(const Rational& a, const Rational& l2, const Rational& m2) {
  const Rational one(1);
  const Rational ia2 = (a * a).inverse();
  Poly p2(std::vector<Rational>{-m2, one});
  Poly p1(std::vector<Rational>{m2, Rational(-3)});
  Poly p0(std::vector<Rational>{((a + one) * ia2 - l2 * m2) * m2,
                                Rational(2) * l2 * m2 + (a + one) * (Rational(2) * a - one) * ia2,
                                -l2});
  return {p0, p1, p2};
}

DiffOp example4_P(const Rational& a, const Rational& l2, const Rational& m2) {
  auto p = example4_p(a, l2, m2);
  RationalFunction pre(Poly(1), p[2].inflate(2) * Poly::monomial(Rational(1), 2));
  std::vector<RationalFunction> c;
  for (const auto& q : p) c.push_back(pre * RationalFunction(q.inflate(2)));
  return DiffOp(Form::kEuler, std::move(c));
}

std::vector<QuasiPolynomial> dg_even_basis(const BesselIndex& beta, int d) {
  const int N = beta.N;
  std::vector<QuasiPolynomial> phi;
  for (int k = 0; k < N; ++k) {
    Rational mu(1);
    for (int j = 1; j <= d; ++j) {
      if (j > 1) {
        Rational prod(1);
        for (const auto& bi : beta.beta)
          prod *= bi - beta.beta[static_cast<std::size_t>(k)] - Rational((j - 1) * N);
        if (prod.is_zero()) fail(ErrorKind::kSpecInvalid, "beta^d has repeated exponents");
        mu = mu / prod;
      }
      phi.push_back(QuasiPolynomial::monomial(
          mu, beta.beta[static_cast<std::size_t>(k)] + Rational((j - 1) * N)));
    }
  }
  return phi;
}

linalg::Matrix<Rational> dg_even_matrix(const DgEven& ex) {
  const int N = ex.beta.N, d = ex.d;
  if (static_cast<int>(ex.t.size()) != N)
    fail(ErrorKind::kUsage, "dg-even needs one t-sequence per beta_k");
  linalg::Matrix<Rational> A(static_cast<std::size_t>(d),
                             std::vector<Rational>(static_cast<std::size_t>(d * N)));
  for (int r = 0; r < d; ++r)
    for (int k = 0; k < N; ++k)
      for (int j = 0; j <= r; ++j) {
        const auto& tk = ex.t[static_cast<std::size_t>(k)];
        const std::size_t l = static_cast<std::size_t>(r - j);
        if (l < tk.size()) A[static_cast<std::size_t>(r)][static_cast<std::size_t>(k * d + j)] = tk[l];
      }
  return A;
}

KernelSpec dg_even_spec(const DgEven& ex) {
  auto phi = dg_even_basis(ex.beta, ex.d);
  auto A = dg_even_matrix(ex);
  KernelSpec s{ex.beta, {}, {}};
  for (const auto& row : A) {
    QuasiPolynomial f;
    for (std::size_t i = 0; i < row.size(); ++i) f += row[i] * phi[i];
    AtZeroGroup g;
    g.terms = f;
    s.at_zero.push_back(g);
  }
  return s;
}

KernelSpec monomial_spec(const BesselIndex& beta, int d, const linalg::Matrix<Rational>& A) {
  auto gamma = beta_power(beta, d);
  KernelSpec s{beta, {}, {}};
  for (const auto& row : A) {
    QuasiPolynomial f;
    for (std::size_t i = 0; i < row.size() && i < gamma.size(); ++i)
      f.add_term(row[i], gamma[i], 0);
    AtZeroGroup g;
    g.terms = f;
    s.at_zero.push_back(g);
  }
  return s;
}

}  // namespace bispec::golden
