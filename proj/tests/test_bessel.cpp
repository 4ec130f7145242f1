#include <gtest/gtest.h>

#include <algorithm>

#include "bispec/bessel.hpp"
#include "bispec/error.hpp"
#include "gen.hpp"

using namespace bispec;
using bispec::testing::Gen;

namespace {

RationalFunction xp(int k, const Rational& c = Rational(1)) { return RationalFunction::monomial(c, k); }
DiffOp del(std::vector<RationalFunction> c) { return DiffOp(Form::kDel, std::move(c)); }
Poly poly(std::vector<Rational> c) { return Poly(std::move(c)); }

std::vector<std::pair<Rational, int>> exponents(const std::vector<QuasiPolynomial>& basis) {
  std::vector<std::pair<Rational, int>> out;
  for (const auto& q : basis) {
    EXPECT_EQ(q.terms().size(), 1u);
    out.push_back(q.terms().begin()->first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(BesselIndex, Normalization) {
  EXPECT_NO_THROW(BesselIndex::make({Rational(2, 3), Rational(1, 3)}));
  try {
    BesselIndex::make({0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUsage);
    EXPECT_NE(std::string(e.what()).find("normalization violated"), std::string::npos);
  }
}

TEST(BesselPoly, Examples) {
  EXPECT_EQ(bessel_poly(BesselIndex::make({0})), DiffOp::polynomial_in_euler(Poly::x()));
  EXPECT_EQ(bessel_poly(BesselIndex::make({0, 1})), DiffOp::polynomial_in_euler(poly({0, -1, 1})));
  EXPECT_EQ(bessel_poly(BesselIndex::make({Rational(2, 3), Rational(1, 3)})),
            DiffOp::polynomial_in_euler(poly({Rational(2, 9), -1, 1})));
}

TEST(BesselOp, Examples) {
  EXPECT_EQ(bessel_op(BesselIndex::make({0, 1})).in(Form::kDel), del({0, 0, 1}));
  EXPECT_EQ(bessel_op(BesselIndex::make({Rational(2, 3), Rational(1, 3)})).in(Form::kDel),
            del({xp(-2, Rational(2, 9)), 0, 1}));
  EXPECT_EQ(bessel_op(BesselIndex::make({-1, 2})).in(Form::kDel), del({xp(-2, Rational(-2)), 0, 1}));
  EXPECT_EQ(bessel_op(BesselIndex::make({0}), 'z').var(), 'z');
}

TEST(BetaPower, Examples) {
  auto b = BesselIndex::make({0, 1});
  EXPECT_EQ(beta_power(b, 2), (std::vector<Rational>{0, 2, 1, 3}));
  auto c = BesselIndex::make({Rational(2, 3), Rational(1, 3)});
  EXPECT_EQ(beta_power(c, 1), c.beta);
  auto z = BesselIndex::make({0});
  EXPECT_EQ(beta_power(z, 3), (std::vector<Rational>{0, 1, 2}));
  EXPECT_EQ(index_op(beta_power(z, 3)).in(Form::kDel), del({0, 0, 0, 1}));
}

TEST(BetaPower, OperatorIdentityRandomized) {
  Gen g(301);
  for (int i = 0; i < 30; ++i) {
    auto beta = g.beta(g.integer(1, 3));
    int d = g.integer(1, 3);
    auto bd = beta_power(beta, d);
    ASSERT_EQ(index_op(bd), power(bessel_op(beta), d)) << beta.str() << " d=" << d;
    Rational sum;
    for (const auto& v : bd) sum += v;
    const int M = d * beta.N;
    ASSERT_EQ(sum, Rational(M * (M - 1), 2));
  }
}

TEST(WaveCoeffs, Examples) {
  auto z = wave_coeffs(BesselIndex::make({0}), 6);
  ASSERT_EQ(z.size(), 7u);
  EXPECT_EQ(z[0], Rational(1));
  for (std::size_t k = 1; k < z.size(); ++k) EXPECT_TRUE(z[k].is_zero());
  auto f = wave_coeffs(BesselIndex::make({0, 1}), 6);
  for (std::size_t k = 1; k < f.size(); ++k) EXPECT_TRUE(f[k].is_zero());
  auto n = wave_coeffs(BesselIndex::make({Rational(2, 3), Rational(1, 3)}), 2);
  EXPECT_EQ(n[1], Rational(1, 9));
  EXPECT_EQ(n[2], Rational(5, 81));
}

TEST(WaveCoeffs, SecondOrderClosedRecursion) {
  // N = 2: a_k = P_beta(1 - k) a_{k-1} / (2k).
  Gen g(302);
  for (int i = 0; i < 25; ++i) {
    auto beta = g.beta(2);
    Poly P = index_polynomial(beta.beta);
    auto a = wave_coeffs(beta, 10);
    for (int k = 1; k <= 10; ++k)
      ASSERT_EQ(a[static_cast<std::size_t>(k)],
                P.eval(Rational(1 - k)) * a[static_cast<std::size_t>(k - 1)] / Rational(2 * k))
          << beta.str() << " k=" << k;
  }
}

TEST(WaveCoeffs, EigenfunctionResidualVanishes) {
  Gen g(303);
  for (int i = 0; i < 24; ++i) {
    auto beta = g.beta(g.integer(1, 4));
    int K = g.integer(4, 12);
    WaveSeries psi = bessel_wave(beta, K);
    WaveSeries lhs = psi.apply(bessel_op(beta));
    WaveSeries rhs = psi.times(xp(beta.N), 'z');
    WaveSeries d = lhs - rhs;
    ASSERT_FALSE(d.window().empty());
    ASSERT_FALSE(d.first_nonzero().has_value()) << beta.str() << " K=" << K;
  }
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity(BesselIndex::make({0, 1}), 2), 1);
  EXPECT_EQ(multiplicity(BesselIndex::make({Rational(1, 2), Rational(1, 2)}), Rational(1, 2)), 2);
  EXPECT_EQ(multiplicity(BesselIndex::make({-1, 2}), 3), 1);
  EXPECT_EQ(multiplicity(BesselIndex::make({-1, 2}), 4), 1);
  EXPECT_EQ(multiplicity(BesselIndex::make({-1, 2}), -2), 0);
}

TEST(Multiplicity, BruteForceRandomized) {
  Gen g(304);
  for (int i = 0; i < 60; ++i) {
    int N = g.integer(1, 3);
    std::vector<Rational> b;
    Rational sum;
    for (int k = 0; k + 1 < N; ++k) {
      b.push_back(Rational(g.integer(-4, 4), g.integer(1, 2)));
      sum += b.back();
    }
    b.push_back(Rational(N * (N - 1), 2) - sum);
    auto beta = BesselIndex::make(b);
    Rational gamma(g.integer(-6, 12), g.integer(1, 2));
    int brute = 0;
    for (const auto& bj : beta.beta)
      for (int k = 0; k <= 40; ++k)
        if (bj + Rational(k * N) == gamma) ++brute;
    ASSERT_EQ(multiplicity(beta, gamma), brute);
  }
}

TEST(KernelBasis, Examples) {
  HFactorization z1{1, {}};
  auto a = kernel_basis_h(BesselIndex::make({0, 1}), z1, 8);
  EXPECT_EQ(exponents(a.at_zero), (std::vector<std::pair<Rational, int>>{{0, 0}, {1, 0}}));
  EXPECT_TRUE(a.at_points.empty());

  auto b = kernel_basis_h(BesselIndex::make({Rational(1, 2), Rational(1, 2)}), z1, 8);
  EXPECT_EQ(exponents(b.at_zero),
            (std::vector<std::pair<Rational, int>>{{Rational(1, 2), 0}, {Rational(1, 2), 1}}));

  HFactorization z2{2, {}};
  auto c = kernel_basis_h(BesselIndex::make({0, 1}), z2, 8);
  EXPECT_EQ(exponents(c.at_zero), (std::vector<std::pair<Rational, int>>{{0, 0}, {1, 0}, {2, 0}, {3, 0}}));
}

TEST(KernelBasis, ElementsAreAnnihilated) {
  Gen g(305);
  for (int i = 0; i < 12; ++i) {
    auto beta = g.beta(g.integer(1, 3), 2);
    HFactorization h{g.integer(1, 2), {}};
    if (g.coin()) h.points.push_back({g.nonzero(3, 2), g.integer(1, 2)});
    auto kb = kernel_basis_h(beta, h, 10);
    DiffOp H = evaluate(h_polynomial(h, beta.N), bessel_op(beta));
    for (const auto& q : kb.at_zero) ASSERT_TRUE(apply(H, q).is_zero()) << q.str();
    auto cleared = clear_to_laurent(H).first;
    for (const auto& pj : kb.at_points)
      for (const auto& s : pj.jets) {
        ExpSeries r = s.apply(cleared);
        for (int e = r.valid_min(); e <= r.max_degree(); ++e) ASSERT_TRUE(r.coeff(e).is_zero());
      }
  }
}

TEST(KernelBasis, CollidingPointsRejected) {
  HFactorization h{0, {{Rational(1), 1}, {Rational(-1), 1}}};
  try {
    (void)kernel_basis_h(BesselIndex::make({0, 1}), h, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUsage);
  }
}

TEST(AnnihilatingPower, Examples) {
  auto b = BesselIndex::make({0, 1});
  EXPECT_EQ(annihilating_power(b, 0, 0), 1);
  EXPECT_EQ(annihilating_power(b, 3, 0), 2);
  EXPECT_EQ(annihilating_power(b, Rational(1, 2), 0), -1);
  auto h = BesselIndex::make({Rational(1, 2), Rational(1, 2)});
  EXPECT_EQ(annihilating_power(h, Rational(1, 2), 1), 1);
  EXPECT_EQ(annihilating_power(h, Rational(1, 2), 2), -1);
}
