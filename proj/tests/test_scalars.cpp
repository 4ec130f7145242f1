#include <gtest/gtest.h>

#include "bispec/cyclotomic.hpp"
#include "bispec/error.hpp"
#include "bispec/rational_function.hpp"
#include "gen.hpp"

using namespace bispec;
using bispec::testing::Gen;

namespace {

CyclotomicScalar eps(int n) { return CyclotomicField::make(n)->primitive_root(); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kDomain;
}

}  // namespace

TEST(Rational, Canonical) {
  Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(Rational(0, -5).denominator(), 1);
  EXPECT_EQ(Rational::parse(" -10/4 "), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("+7"), Rational(7));
}

TEST(Rational, ParseErrors) {
  EXPECT_EQ(kind_of([] { Rational::parse("1/"); }), ErrorKind::kUsage);
  EXPECT_EQ(kind_of([] { Rational::parse("a"); }), ErrorKind::kUsage);
  EXPECT_EQ(kind_of([] { Rational::parse("1/0"); }), ErrorKind::kDomain);
  EXPECT_EQ(kind_of([] { Rational(0).inverse(); }), ErrorKind::kDomain);
}

TEST(Rational, ParsePrintRoundTrip) {
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    Rational r(g.integer(-1000, 1000), g.integer(1, 999));
    EXPECT_EQ(Rational::parse(r.str()), r);
    EXPECT_EQ(Rational::parse(r.str()).str(), r.str());
  }
}

TEST(Rational, BigValuesStayExact) {
  Rational r = Rational(3, 7).pow(60);
  EXPECT_EQ(r * Rational(7, 3).pow(60), Rational(1));
  EXPECT_EQ(Rational::parse(r.str()), r);
}

TEST(Cyclotomic, SpecExamples) {
  auto e2 = eps(2);
  EXPECT_EQ(e2 * e2, CyclotomicField::make(2)->one());
  EXPECT_TRUE(e2.is_rational());
  EXPECT_EQ(e2.to_rational(), Rational(-1));

  auto f3 = CyclotomicField::make(3);
  auto e3 = f3->primitive_root();
  EXPECT_EQ((f3->one() + e3).inverse(), -e3);

  auto e4 = eps(4);
  EXPECT_EQ(e4 * e4, -CyclotomicField::make(4)->one());
}

TEST(Cyclotomic, PrimitiveRoots) {
  EXPECT_EQ(eps(1).to_rational(), Rational(1));
  EXPECT_EQ(eps(2).to_rational(), Rational(-1));
  auto f6 = CyclotomicField::make(6);
  EXPECT_EQ(f6->modulus(), Poly(std::vector<Rational>{1, -1, 1}));
  auto e6 = f6->primitive_root();
  EXPECT_EQ(e6.pow(6), f6->one());
  EXPECT_EQ(e6.pow(3), -f6->one());
  for (int n = 1; n <= 12; ++n) {
    auto f = CyclotomicField::make(n);
    auto e = f->primitive_root();
    EXPECT_EQ(e.pow(n), f->one()) << n;
    for (int k = 1; k < n; ++k) EXPECT_FALSE(e.pow(k) == f->one()) << n << " " << k;
  }
}

TEST(Cyclotomic, CharacterOrthogonality) {
  for (int n = 2; n <= 10; ++n) {
    auto f = CyclotomicField::make(n);
    auto e = f->primitive_root();
    for (int k = 1; k < n; ++k) {
      auto s = f->zero();
      for (int i = 0; i < n; ++i) s = s + e.pow(static_cast<long>(i) * k);
      EXPECT_TRUE(s.is_zero()) << n << " " << k;
    }
  }
}

TEST(Cyclotomic, MismatchedOrders) {
  EXPECT_EQ(kind_of([] { (void)(eps(3) + eps(4)); }), ErrorKind::kUsage);
  EXPECT_EQ(kind_of([] { CyclotomicField::make(5)->zero().inverse(); }), ErrorKind::kDomain);
}

TEST(Cyclotomic, FieldAxiomsRandomized) {
  Gen g(2024);
  for (int trial = 0; trial < 150; ++trial) {
    int n = g.integer(1, 12);
    auto f = CyclotomicField::make(n);
    auto pick = [&] {
      std::vector<Rational> c(static_cast<std::size_t>(f->degree()));
      for (auto& v : c) v = g.rational(5, 3);
      return f->from_poly(Poly(c));
    };
    auto a = pick(), b = pick(), c = pick();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, f->zero());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), f->one());
    }
    EXPECT_EQ(static_cast<int>(a.coords().size()), euler_phi(n));
  }
}

TEST(Poly, Arithmetic) {
  Poly x = Poly::x();
  Poly p = (x - Poly(1)) * (x + Poly(2));
  EXPECT_EQ(p, Poly(std::vector<Rational>{-2, 1, 1}));
  auto [q, r] = divmod(p, x - Poly(1));
  EXPECT_EQ(q, x + Poly(2));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(p, x * x - Poly(1)), x - Poly(1));
  EXPECT_EQ(Poly::from_roots({Rational(1), Rational(-2)}), p);
  EXPECT_EQ(p.inflate(2).deflate(2), p);
  EXPECT_FALSE(p.deflate(2).has_value());
  EXPECT_EQ(Poly().degree(), -1);
  EXPECT_EQ(p.str("z"), "z^2 + z - 2");
}

TEST(RationalFunction, Canonical) {
  Poly x = Poly::x();
  RationalFunction f(Poly(2) * (x * x - Poly(1)), Poly(4) * (x - Poly(1)));
  EXPECT_EQ(f.num(), (x + Poly(1)) * Rational(1, 2));
  EXPECT_EQ(f.den(), Poly(1));
  RationalFunction g(Poly(1), x * x);
  EXPECT_TRUE(g.is_laurent());
  EXPECT_EQ(g.laurent_shift(), 2);
  EXPECT_EQ(g.derivative(), RationalFunction::monomial(Rational(-2), -3));
  EXPECT_EQ(kind_of([] { RationalFunction(Poly(1), Poly()); }), ErrorKind::kDomain);
}

TEST(RationalFunction, FieldAxiomsRandomized) {
  Gen g(99);
  for (int i = 0; i < 100; ++i) {
    auto a = g.rational_function(), b = g.rational_function(), c = g.rational_function();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b).derivative(), a.derivative() * b + a * b.derivative());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), RationalFunction(1));
    }
  }
}
