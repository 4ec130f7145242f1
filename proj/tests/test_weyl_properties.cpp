#include <gtest/gtest.h>

#include "bispec/diffop.hpp"
#include "gen.hpp"

using namespace bispec;
using bispec::testing::Gen;

// 680 randomized cases in total, fixed seeds.

TEST(WeylProperties, Associativity) {
  Gen g(101);
  for (int i = 0; i < 120; ++i) {
    bool laurent = i % 2 == 0;
    DiffOp a = g.op(3, laurent), b = g.op(2, laurent), c = g.op(2, laurent);
    ASSERT_EQ((a * b) * c, a * (b * c)) << "case " << i;
  }
}

TEST(WeylProperties, Distributivity) {
  Gen g(102);
  for (int i = 0; i < 120; ++i) {
    DiffOp a = g.op(3, i % 3 != 0), b = g.op(3, true), c = g.op(3, i % 2 == 0);
    ASSERT_EQ(a * (b + c), a * b + a * c) << "case " << i;
    ASSERT_EQ((b + c) * a, b * a + c * a) << "case " << i;
  }
}

TEST(WeylProperties, FormRoundTrip) {
  Gen g(103);
  for (int i = 0; i < 120; ++i) {
    Form f = i % 2 ? Form::kDel : Form::kEuler;
    Form other = f == Form::kDel ? Form::kEuler : Form::kDel;
    DiffOp a = g.op(6, i % 3 == 0, f);
    ASSERT_EQ(a.in(other).in(f), a) << "case " << i;
    ASSERT_EQ(a.in(other).order(), a.order()) << "case " << i;
  }
}

TEST(WeylProperties, AdjointIsAntiautomorphism) {
  Gen g(104);
  for (int i = 0; i < 100; ++i) {
    DiffOp a = g.op(3, i % 2 == 0), b = g.op(3, i % 3 == 0);
    ASSERT_EQ((a * b).adjoint(), b.adjoint() * a.adjoint()) << "case " << i;
  }
}

TEST(WeylProperties, AdjointIsInvolutive) {
  Gen g(105);
  for (int i = 0; i < 60; ++i) {
    DiffOp a = g.op(5, i % 2 == 0, i % 3 ? Form::kDel : Form::kEuler);
    ASSERT_EQ(a.adjoint().adjoint(), a) << "case " << i;
  }
}

TEST(WeylProperties, LeftDivisionReconstructs) {
  Gen g(106);
  for (int i = 0; i < 100; ++i) {
    DiffOp a = g.op(5, i % 2 == 0), p = g.op(3, i % 3 != 0);
    auto d = left_divide(a, p);
    ASSERT_LT(d.remainder.order(), p.order()) << "case " << i;
    ASSERT_EQ(d.quotient * p + d.remainder, a.in(p.form())) << "case " << i;
  }
}

TEST(WeylProperties, RightDivisionReconstructs) {
  Gen g(107);
  for (int i = 0; i < 60; ++i) {
    DiffOp a = g.op(5, i % 2 == 0), p = g.op(3, true);
    auto d = right_divide(a, p);
    ASSERT_LT(d.remainder.order(), p.order()) << "case " << i;
    ASSERT_EQ((p * d.quotient + d.remainder).in(a.form()), a) << "case " << i;
  }
}
