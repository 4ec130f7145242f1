#include <gtest/gtest.h>

#include "bispec/error.hpp"
#include "bispec/golden.hpp"
#include "bispec/json_io.hpp"
#include "gen.hpp"

using namespace bispec;
using bispec::testing::Gen;

namespace {

template <class T>
T round_trip(const T& v) {
  json j = v;
  return parse_json(j.dump()).get<T>();
}

ErrorKind kind_of(const std::string& text, auto get) {
  try {
    get(parse_json(text));
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorKind::kVerification;
}

}  // namespace

TEST(Json, ScalarEncoding) {
  EXPECT_EQ(json(Rational(-20, 9)), json("-20/9"));
  EXPECT_EQ(json(Rational(3)), json("3"));
  EXPECT_EQ(json(7).get<Rational>(), Rational(7));
  EXPECT_EQ(json("6/4").get<Rational>(), Rational(3, 2));
  EXPECT_EQ(json(Poly(std::vector<Rational>{1, 0, Rational(1, 2)})), json({"1", "0", "1/2"}));
}

TEST(Json, MalformedInputIsUsageError) {
  EXPECT_EQ(kind_of("{", [](const json&) {}), ErrorKind::kUsage);
  EXPECT_EQ(kind_of("\"1/x\"", [](const json& j) { (void)j.get<Rational>(); }), ErrorKind::kUsage);
  EXPECT_EQ(kind_of("\"1/0\"", [](const json& j) { (void)j.get<Rational>(); }), ErrorKind::kDomain);
  EXPECT_EQ(kind_of("{\"N\": 1}", [](const json& j) { (void)j.get<BesselIndex>(); }), ErrorKind::kUsage);
  EXPECT_EQ(kind_of("{\"form\": \"weird\", \"var\": \"x\", \"coeffs\": []}",
                    [](const json& j) { (void)j.get<DiffOp>(); }),
            ErrorKind::kUsage);
}

TEST(Json, MissingFieldNamed) {
  try {
    (void)parse_json("{\"beta\": {\"N\": 1, \"beta\": [\"0\"]}}").get<KernelSpec>();
  } catch (const Error& e) {
    // at_zero and at_points default to empty; a spec with only beta is valid JSON.
    FAIL() << e.what();
  }
  try {
    (void)parse_json("{\"N\": 1}").get<BesselIndex>();
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("'beta'"), std::string::npos) << e.what();
  }
}

TEST(Json, OperatorRoundTripRandomized) {
  Gen g(601);
  for (int i = 0; i < 60; ++i) {
    DiffOp a = g.op(4, i % 2 == 0, i % 3 ? Form::kDel : Form::kEuler, i % 4 ? 'x' : 'z');
    DiffOp b = round_trip(a);
    ASSERT_EQ(b, a) << a.str();
    ASSERT_EQ(b.form(), a.form());
    ASSERT_EQ(b.var(), a.var());
    RationalFunction f = g.rational_function();
    ASSERT_EQ(round_trip(f), f);
    QuasiPolynomial q = g.quasi(3, 2);
    ASSERT_EQ(round_trip(q), q);
  }
}

TEST(Json, WaveSeriesRoundTrip) {
  WaveSeries s = bessel_wave(BesselIndex::make({Rational(2, 3), Rational(1, 3)}), 5);
  WaveSeries t = round_trip(s);
  EXPECT_EQ(t.window().min_x, s.window().min_x);
  EXPECT_EQ(t.window().max_z, s.window().max_z);
  EXPECT_FALSE((t - s).first_nonzero().has_value());
}

TEST(Json, SpecRoundTrip) {
  auto ex = golden::example4(Rational(1, 3), 1, 1);
  for (const KernelSpec& s : {golden::rank1_spec(), golden::example4_spec(ex),
                              golden::dg_even_spec({BesselIndex::make({Rational(-3, 2), Rational(5, 2)}), 2,
                                                    {{1, 0}, {0, 1}}})}) {
    KernelSpec t = round_trip(s);
    EXPECT_EQ(json(t), json(s));
    EXPECT_EQ(validate_spec(t).g, validate_spec(s).g);
  }
}

TEST(Json, CertificateRoundTrip) {
  auto c = build(golden::example4_spec(golden::example4(Rational(1, 3), 1, 1))).certificate;
  DarbouxCertificate d = round_trip(c);
  EXPECT_EQ(d.P, c.P);
  EXPECT_EQ(d.Q, c.Q);
  EXPECT_EQ(d.f, c.f);
  EXPECT_EQ(d.g, c.g);
  EXPECT_EQ(d.h, c.h);
  EXPECT_EQ(d.depth, c.depth);
  EXPECT_EQ(d.witnesses.normalized, c.witnesses.normalized);
  EXPECT_EQ(json(d), json(c));
  EXPECT_NO_THROW((void)certify(d.beta, d.P, d.Q, d.f, d.g));
}

TEST(Json, PairDocumentKeys) {
  auto pair = make_pair(build(golden::rank1_spec()).certificate);
  json j = pair;
  for (const char* k : {"certificate", "Pb", "Qb", "L", "Lambda", "h", "Theta"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["Theta"], json({"0", "0", "1"}));
}
