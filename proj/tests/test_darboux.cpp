#include <gtest/gtest.h>

#include <optional>

#include "bispec/darboux.hpp"
#include "bispec/error.hpp"
#include "bispec/golden.hpp"
#include "gen.hpp"

using namespace bispec;
using bispec::testing::Gen;

namespace {

RationalFunction xp(int k, const Rational& c = Rational(1)) { return RationalFunction::monomial(c, k); }
DiffOp del(std::vector<RationalFunction> c) { return DiffOp(Form::kDel, std::move(c)); }
Poly poly(std::vector<Rational> c) { return Poly(std::move(c)); }
QuasiPolynomial mono(const Rational& c, const Rational& g, int j = 0) { return QuasiPolynomial::monomial(c, g, j); }

KernelSpec seeds(const BesselIndex& beta, std::vector<QuasiPolynomial> qs) {
  KernelSpec s{beta, {}, {}};
  for (auto& q : qs) {
    AtZeroGroup g;
    g.terms = std::move(q);
    s.at_zero.push_back(std::move(g));
  }
  return s;
}

template <class F>
std::optional<ErrorKind> kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

bool same(const DiffOp& a, const DiffOp& b) { return a.in(Form::kDel) == b.in(Form::kDel); }

const Rational kNu(1, 3);

}  // namespace

TEST(ValidateSpec, RankOne) {
  auto ns = validate_spec(golden::rank1_spec());
  EXPECT_EQ(ns.n0, 1);
  EXPECT_EQ(ns.n, 1);
  EXPECT_EQ(ns.g, Poly::x());
  EXPECT_EQ(ns.h, Poly::monomial(Rational(1), 2));
  EXPECT_EQ(ns.f, Poly::x());
  EXPECT_TRUE(ns.monomial());
  EXPECT_TRUE(ns.log_free);
}

TEST(ValidateSpec, PointGroups) {
  auto ex = golden::example4(kNu, 1, 1);
  auto ns = validate_spec(golden::example4_spec(ex));
  EXPECT_EQ(ns.n0, 0);
  EXPECT_EQ(ns.n, 2);
  EXPECT_EQ(ns.g, poly({-1, 0, 1}));
  ASSERT_EQ(ns.classes.size(), 1u);
  EXPECT_EQ(ns.classes[0].lambda_N, Rational(1));
  EXPECT_EQ(ns.classes[0].depth, 2);
  EXPECT_EQ(ns.h, poly({1, -2, 1}));
}

TEST(ValidateSpec, IncongruentExponentsRejected) {
  auto s = seeds(BesselIndex::make({0, 1}), {mono(1, 0) + mono(1, 1)});
  try {
    (void)validate_spec(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSpecInvalid);
  }
}

TEST(ValidateSpec, ExponentOutsideBetaRejected) {
  auto s = seeds(BesselIndex::make({0}), {mono(1, Rational(1, 2))});
  EXPECT_EQ(kind_of([&] { (void)validate_spec(s); }), ErrorKind::kSpecInvalid);
}

TEST(BuildMonomial, DependentElementsRejected) {
  auto s = seeds(BesselIndex::make({0}), {mono(1, 1), mono(2, 1)});
  auto ns = validate_spec(s);
  EXPECT_EQ(kind_of([&] { (void)build_P_monomial(ns); }), ErrorKind::kRankDeficiency);
}

TEST(ValidateSpec, DerivativeGroupExpands) {
  BesselIndex beta = BesselIndex::make({Rational(1, 2), Rational(1, 2)});
  KernelSpec s{beta, {}, {}};
  AtZeroGroup g;
  g.terms = mono(1, Rational(1, 2), 1);
  g.j0 = 1;
  s.at_zero.push_back(g);
  auto ns = validate_spec(s);
  EXPECT_EQ(ns.n, 2);
  EXPECT_EQ(ns.zero_elements.size(), 2u);
  EXPECT_FALSE(ns.log_free);
}

TEST(BuildMonomial, Examples) {
  EXPECT_EQ(build_P_monomial(validate_spec(golden::rank1_spec())).in(Form::kDel), del({xp(-1, -1), 1}));
  EXPECT_EQ(build_P_monomial(validate_spec(seeds(BesselIndex::make({0, 1}), {mono(1, 0)}))).in(Form::kDel),
            del({0, 1}));
  auto half = seeds(BesselIndex::make({Rational(1, 2), Rational(1, 2)}), {mono(1, Rational(1, 2))});
  DiffOp expect = DiffOp::scalar(xp(-1), Form::kEuler) * DiffOp(Form::kEuler, {Rational(-1, 2), 1});
  EXPECT_TRUE(same(build_P_monomial(validate_spec(half)), expect));
}

TEST(BuildMonomial, LogKernelGivesBesselOperator) {
  BesselIndex beta = BesselIndex::make({Rational(1, 2), Rational(1, 2)});
  KernelSpec s{beta, {}, {}};
  AtZeroGroup g;
  g.terms = mono(1, Rational(1, 2), 1);
  s.at_zero.push_back(g);
  auto r = build(s);
  EXPECT_TRUE(same(r.certificate.P, bessel_op(beta)));
  EXPECT_TRUE(same(r.certificate.Q, DiffOp::identity()));
  EXPECT_EQ(r.certificate.h, Poly::x());
}

TEST(BuildGeneral, ExampleFourCoefficients) {
  auto ex = golden::example4(kNu, 1, 1);
  auto ns = validate_spec(golden::example4_spec(ex));
  BuildStats st;
  DiffOp P = build_P_general(ns, {}, &st);
  auto lnf = left_normal_form(P, 2);
  EXPECT_EQ(lnf.n, 2);
  auto p = golden::example4_p(1, 1, ex.mu2);
  ASSERT_EQ(lnf.p.size(), 3u);
  Rational scale = lnf.p[2].leading() / p[2].leading();
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(lnf.p[k], p[k] * Poly(scale)) << "k=" << k;
  EXPECT_GT(st.equations, 0);
  EXPECT_GT(st.unknowns, 0);
}

TEST(BuildGeneral, ExponentialKernel) {
  // N = 1, kernel {e^x}: P = dx - 1.
  KernelSpec s{BesselIndex::make({0}), {}, {AtPointGroup{Rational(1), {Rational(1)}}}};
  auto r = build(s);
  EXPECT_EQ(r.certificate.P.in(Form::kDel), del({-1, 1}));
  EXPECT_EQ(r.certificate.h, poly({-1, 1}));
  EXPECT_EQ(r.certificate.g, poly({-1, 1}));
  EXPECT_EQ(r.certificate.f, Poly(1));
  EXPECT_TRUE(same(r.certificate.Q, DiffOp::identity()));
}

TEST(BuildGeneral, AgreesWithMonomialPath) {
  Gen g(401);
  for (int i = 0; i < 15; ++i) {
    auto c = g.monomial_case(2, 2, 2);
    auto ns = validate_spec(c.spec());
    ASSERT_TRUE(same(build_P_general(ns), build_P_monomial(ns))) << c.beta.str() << " d=" << c.d;
  }
}

TEST(BuildGeneral, LogKernelWithPointsUnsupported) {
  BesselIndex beta = BesselIndex::make({Rational(1, 2), Rational(1, 2)});
  KernelSpec s{beta, {}, {AtPointGroup{Rational(1), {Rational(1)}}}};
  AtZeroGroup g;
  g.terms = mono(1, Rational(1, 2), 1);
  s.at_zero.push_back(g);
  EXPECT_EQ(kind_of([&] { (void)build(s); }), ErrorKind::kUnsupportedInput);
}

TEST(ComputeQ, Examples) {
  DiffOp P = del({xp(-1, -1), 1});
  EXPECT_EQ(compute_Q(P, Poly::monomial(Rational(1), 2), BesselIndex::make({0})).in(Form::kDel),
            del({xp(-1), 1}));
  BesselIndex beta = BesselIndex::make({Rational(2, 3), Rational(1, 3)});
  EXPECT_TRUE(same(compute_Q(bessel_op(beta), Poly::x(), beta), DiffOp::identity()));
}

TEST(ComputeQ, NonDivisorIsCertificationError) {
  DiffOp P = del({1, 1});
  EXPECT_EQ(kind_of([&] { (void)compute_Q(P, Poly::x(), BesselIndex::make({0, 1})); }),
            ErrorKind::kCertification);
}

TEST(ComputeQ, ExampleFourAdjointFormula) {
  auto ex = golden::example4(kNu, 1, 1);
  DiffOp P = golden::example4_P(1, 1, ex.mu2);
  Poly h = poly({1, -2, 1});
  DiffOp Q = compute_Q(P, h, BesselIndex::make({1 - kNu, kNu}));
  EXPECT_TRUE(same(Q, golden::example4_P(ex.b, 1, ex.mu2).adjoint()));
}

TEST(Certify, Examples) {
  auto r = build(golden::rank1_spec());
  const auto& c = r.certificate;
  EXPECT_TRUE(c.witnesses.qp_equals_h);
  EXPECT_TRUE(c.witnesses.qp_cross_checked);
  EXPECT_TRUE(c.witnesses.fg_equals_h);
  EXPECT_TRUE(c.witnesses.p_normal_form);
  EXPECT_TRUE(c.witnesses.g_product_form);
  EXPECT_TRUE(c.witnesses.g_matches_spec);
  EXPECT_TRUE(c.witnesses.normalized);
  EXPECT_GT(c.witnesses.normalization_window, 0);

  auto ex = golden::example4(kNu, 1, 1);
  auto e4 = build(golden::example4_spec(ex)).certificate;
  EXPECT_EQ(e4.f, poly({-1, 0, 1}));
  EXPECT_EQ(e4.g, poly({-1, 0, 1}));
}

TEST(Certify, TamperedQRejected) {
  auto c = build(golden::rank1_spec()).certificate;
  try {
    (void)certify(c.beta, c.P, c.Q + DiffOp::identity(), c.f, c.g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCertification);
  }
}

TEST(Certify, WrongExpectedGRejected) {
  auto c = build(golden::rank1_spec()).certificate;
  EXPECT_EQ(kind_of([&] { (void)certify(c.beta, c.P, c.Q, c.f, c.g, poly({1, 1})); }),
            ErrorKind::kCertification);
  EXPECT_NO_THROW((void)certify(c.beta, c.P, c.Q, c.f, c.g, c.g));
}

TEST(Certify, UnnormalizedGRejected) {
  auto c = build(golden::rank1_spec()).certificate;
  Poly two(Rational(2));
  EXPECT_TRUE(kind_of([&] { (void)certify(c.beta, c.P, c.Q, c.f, c.g * two); }).has_value());
}

TEST(NormalForms, ShapeOfRandomBuilds) {
  Gen g(402);
  for (int i = 0; i < 20; ++i) {
    auto c = g.monomial_case();
    auto r = build(c.spec());
    const auto& cert = r.certificate;
    const int N = c.beta.N;
    auto lnf = left_normal_form(cert.P, N);
    ASSERT_EQ(lnf.n, r.spec.n);
    ASSERT_EQ(lnf.p.back().leading(), Rational(1));
    ASSERT_EQ(cert.g.degree(), r.spec.n);
    auto rnf = right_normal_form(cert.Q, N);
    ASSERT_EQ(rnf.q.back().leading(), Rational(1));
    ASSERT_EQ(cert.f * cert.g, r.spec.h.inflate(N)) << c.beta.str();
    ASSERT_TRUE(annihilates_kernel(cert.P, r.spec, cert.depth)) << c.beta.str();
    ASSERT_TRUE(same(cert.Q * cert.P, evaluate(cert.h, bessel_op(c.beta))));
  }
}

TEST(NormalForms, RightCoefficientsReconstruct) {
  Gen g(403);
  for (int i = 0; i < 40; ++i) {
    DiffOp a = g.op(3, true, Form::kEuler);
    auto r = right_coefficients(a);
    DiffOp sum = DiffOp::scalar(RationalFunction(), Form::kEuler);
    DiffOp Dk = DiffOp::identity().in(Form::kEuler);
    for (const auto& c : r) {
      sum = sum + Dk * DiffOp::scalar(c, Form::kEuler);
      Dk = Dk * DiffOp::euler();
    }
    ASSERT_EQ(sum, a.in(Form::kEuler)) << "case " << i;
  }
}

TEST(Annihilation, DetectsForeignOperator) {
  auto ns = validate_spec(golden::rank1_spec());
  EXPECT_TRUE(annihilates_kernel(del({xp(-1, -1), 1}), ns, 8));
  EXPECT_FALSE(annihilates_kernel(DiffOp::del(), ns, 8));
  auto ex = golden::example4(kNu, 1, 1);
  auto e4 = validate_spec(golden::example4_spec(ex));
  EXPECT_TRUE(annihilates_kernel(golden::example4_P(1, 1, ex.mu2), e4, 16));
  EXPECT_FALSE(annihilates_kernel(golden::example4_P(2, 1, ex.mu2), e4, 16));
}
