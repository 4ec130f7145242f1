#include <sstream>

#include "bispec/golden.hpp"
#include "bispec_cli/cli.hpp"

namespace bispec::cli {

namespace {

DiffOp del_op(std::vector<RationalFunction> c, char var = 'x') {
  return DiffOp(Form::kDel, std::move(c), var);
}

bool same(const DiffOp& a, const DiffOp& b) {
  return a.var() == b.var() && a.in(Form::kDel) == b.in(Form::kDel);
}

Poly quadratic(const Rational& c0) { return Poly(std::vector<Rational>{-c0, Rational(0), Rational(1)}); }

struct Checks {
  std::vector<std::pair<std::string, bool>> list;
  std::ostringstream notes;
  void add(std::string name, bool ok) { list.emplace_back(std::move(name), ok); }
};

// Verification failures become a failed check plus a note.
json checked_verify(const BispectralPair& pair, int depth, Checks& c) {
  try {
    auto rep = verify_pair(pair, depth);
    c.add("series residuals vanish", true);
    return rep;
  } catch (const Error& e) {
    c.add("series residuals vanish", false);
    c.notes << "  verify: " << e.what() << "\n";
    return json{{"error", e.what()}};
  }
}

std::string render(const std::string& title, const DarbouxCertificate& cert, const BispectralPair& pair,
                   const Checks& c) {
  std::ostringstream os;
  os << title << "\n";
  os << "  P      = " << cert.P.in(Form::kDel).str() << "\n";
  os << "  Q      = " << cert.Q.in(Form::kDel).str() << "\n";
  os << "  g(z)   = " << cert.g.str("z") << "\n";
  os << "  f(z)   = " << cert.f.str("z") << "\n";
  os << "  L      = " << pair.L.in(Form::kDel).str() << "\n";
  os << "  Lambda = " << pair.Lambda.in(Form::kDel).str() << "\n";
  os << "  h(w)   = " << pair.h.str("w") << "   (w = z^" << cert.beta.N << ")\n";
  os << "  Theta  = " << pair.Theta.str("w") << "   (w = x^" << cert.beta.N << ")\n";
  for (const auto& [name, ok] : c.list) os << (ok ? "  [ok]   " : "  [FAIL] ") << name << "\n";
  os << c.notes.str();
  return os.str();
}

ExampleRun finish(json result, Checks& c, std::string text) {
  ExampleRun run;
  run.result = std::move(result);
  run.checks = c.list;
  run.text = std::move(text);
  return run;
}

}  // namespace

ExampleRun run_rank1(int depth) {
  if (depth <= 0) depth = 10;
  auto r = build(golden::rank1_spec());
  const auto& cert = r.certificate;
  auto pair = make_pair(cert);
  Checks c;
  c.add("L = dx^2 - 2/x^2", same(pair.L, del_op({RationalFunction::monomial(Rational(-2), -2), 0, 1})));
  c.add("Lambda = dz^2 - 2/z^2",
        same(pair.Lambda, del_op({RationalFunction::monomial(Rational(-2), -2), 0, 1}, 'z')));
  c.add("h = w^2", pair.h == Poly::monomial(Rational(1), 2));
  c.add("Theta = w^2", pair.Theta == Poly::monomial(Rational(1), 2));
  c.add("QP = dx^2", same(cert.Q * cert.P, del_op({0, 0, 1})));
  json verify = checked_verify(pair, depth, c);
  auto sa = spectral_algebra(cert.P, cert.beta, 4 * cert.beta.N);
  json result{{"certificate", cert}, {"pair", pair}, {"verify", verify}, {"spectral", sa}};
  return finish(std::move(result), c, render("rank1: beta = (0), kernel {x}", cert, pair, c));
}

ExampleRun run_example4(const Rational& nu, const Rational& a, const Rational& lambda, int depth) {
  auto ex = golden::example4(nu, a, lambda);
  BuildOptions opts;
  opts.depth = depth;
  auto r = build(golden::example4_spec(ex), opts);
  const auto& cert = r.certificate;
  auto pair = make_pair(cert);
  const Rational l2 = lambda * lambda;
  Checks c;
  c.add("P = P(a, lambda, mu)", same(cert.P, golden::example4_P(a, l2, ex.mu2)));
  c.add("Q = P*(b, lambda, mu)", same(cert.Q, golden::example4_P(ex.b, l2, ex.mu2).adjoint()));
  c.add("g = z^2 - lambda^2", cert.g == quadratic(l2));
  c.add("f = z^2 - lambda^2", cert.f == quadratic(l2));
  c.add("Pb = P(a, mu, lambda)", same(pair.Pb.op.with_var('x'), golden::example4_P(a, ex.mu2, l2)));
  c.add("Qb = P*(b, mu, lambda)",
        same(pair.Qb.op.with_var('x'), golden::example4_P(ex.b, ex.mu2, l2).adjoint()));
  c.add("gb = z^2 - mu^2", pair.Pb.poly == quadratic(ex.mu2));
  c.add("fb = z^2 - mu^2", pair.Qb.poly == quadratic(ex.mu2));
  Poly w_mu(std::vector<Rational>{-ex.mu2, Rational(1)});
  c.add("Theta = (w - mu^2)^2", pair.Theta == w_mu * w_mu);
  json verify = checked_verify(pair, depth, c);
  auto sa = spectral_algebra(cert.P, cert.beta, 8);
  c.add("spectral generators {4, 6}, rank 2", sa.generators == std::vector<int>{4, 6} && sa.rank == 2);
  json params{{"nu", nu}, {"a", a}, {"lambda", lambda}, {"mu2", ex.mu2}, {"b", ex.b}};
  json result{{"params", params}, {"certificate", cert}, {"pair", pair},
              {"verify", verify}, {"spectral", sa}, {"stats", r.stats}};
  std::ostringstream title;
  title << "example4: nu = " << nu << ", a = " << a << ", lambda = " << lambda << ", mu^2 = " << ex.mu2
        << ", b = " << ex.b;
  return finish(std::move(result), c, render(title.str(), cert, pair, c));
}

ExampleRun run_dg_even(const BesselIndex& beta, int d, const std::vector<std::vector<Rational>>& t,
                       int depth, int degree_bound) {
  golden::DgEven ex{beta, d, t};
  BuildOptions opts;
  opts.depth = depth;
  auto r = build(golden::dg_even_spec(ex), opts);
  const auto& cert = r.certificate;
  auto pair = make_pair(cert);
  const int N = beta.N;
  Checks c;
  c.add("g = z^d", cert.g == Poly::monomial(Rational(1), d));
  c.add("h = w^d", cert.h == Poly::monomial(Rational(1), d));
  auto lw = left_divide(cert.P * bessel_op(beta), cert.P);
  c.add("P L_beta P^-1 is differential", lw.remainder.is_zero());
  c.add("P L_beta P^-1 has order N", lw.quotient.order() == N);
  json verify = checked_verify(pair, depth, c);
  if (degree_bound <= 0) degree_bound = 4 * N;
  auto sa = spectral_algebra(cert.P, beta, degree_bound);
  bool has_n = false;
  for (int g : sa.degrees) has_n = has_n || g == N;
  c.add("degree N in the spectral algebra", has_n);
  json params{{"beta", beta}, {"d", d}, {"t", t}, {"matrix", golden::dg_even_matrix(ex)}};
  json result{{"params", params},  {"certificate", cert}, {"pair", pair}, {"L_W", lw.quotient},
              {"verify", verify},  {"spectral", sa}};
  std::ostringstream title;
  title << "dg-even: beta = " << beta.str() << ", d = " << d;
  std::string text = render(title.str(), cert, pair, c);
  text += "  L_W    = " + lw.quotient.in(Form::kDel).str() + "\n";
  std::ostringstream rk;
  rk << "  spectral degrees <= " << degree_bound << ":";
  for (int g : sa.degrees) rk << " " << g;
  rk << "; generators:";
  for (int g : sa.generators) rk << " " << g;
  rk << "; rank " << sa.rank << "\n";
  text += rk.str();
  return finish(std::move(result), c, std::move(text));
}

}  // namespace bispec::cli
