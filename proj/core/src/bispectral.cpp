#include "bispec/bispectral.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "bispec/error.hpp"

namespace bispec {

namespace {

DiffOp d_power(int k, char var = 'x') {
  std::vector<RationalFunction> c(static_cast<std::size_t>(k) + 1);
  c.back() = RationalFunction(1);
  return DiffOp(Form::kEuler, std::move(c), var);
}

DiffOp scalar_op(const RationalFunction& f) { return DiffOp::scalar(f, Form::kEuler); }

RationalFunction poly_in_x(const Poly& p) { return RationalFunction(p); }

}  // namespace

Involution strip_right(DiffOp op, Poly poly, const BesselIndex& beta) {
  const DiffOp L = bessel_op(beta);
  Involution r{op, poly, op, poly, 0};
  while (r.poly.valuation() >= beta.N && r.op.order() >= beta.N) {
    Division d = left_divide(r.op, L);
    if (!d.remainder.is_zero()) break;
    r.op = d.quotient;
    r.poly = r.poly.shift_down(beta.N);
    ++r.stripped;
  }
  return r;
}

Involution strip_left(DiffOp op, Poly poly, const BesselIndex& beta) {
  const DiffOp L = bessel_op(beta);
  Involution r{op, poly, op, poly, 0};
  while (r.poly.valuation() >= beta.N && r.op.order() >= beta.N) {
    Division d = right_divide(r.op, L);
    if (!d.remainder.is_zero()) break;
    r.op = d.quotient.in(Form::kEuler);
    r.poly = r.poly.shift_down(beta.N);
    ++r.stripped;
  }
  return r;
}

Involution involute_P(const DiffOp& P, const Poly& g, const BesselIndex& beta) {
  const int N = beta.N;
  LeftNormalForm nf = left_normal_form(P, N);
  const DiffOp L = bessel_op(beta);
  DiffOp sum(Form::kEuler);
  for (int k = 0; k <= nf.n; ++k) {
    const Poly& pk = nf.p[static_cast<std::size_t>(k)];
    if (pk.is_zero()) continue;
    sum += d_power(k) * evaluate(pk, L);
  }
  DiffOp raw = RationalFunction(Poly(1), g) * sum;
  Poly raw_poly = Poly::monomial(Rational(1), nf.n) * nf.p.back().inflate(N);
  return strip_right(raw, raw_poly, beta);
}

Involution involute_Q(const DiffOp& Q, const Poly& f, const BesselIndex& beta) {
  const int N = beta.N;
  RightNormalForm nf = right_normal_form(Q, N);
  const DiffOp L = bessel_op(beta);
  DiffOp sum(Form::kEuler);
  for (int s = 0; s <= nf.m; ++s) {
    const Poly& qs = nf.q[static_cast<std::size_t>(s)];
    if (qs.is_zero()) continue;
    sum += evaluate(qs, L) * d_power(s);
  }
  DiffOp raw = sum * scalar_op(RationalFunction(Poly(1), f));
  Poly raw_poly = Poly::monomial(Rational(1), nf.m) * nf.q.back().inflate(N);
  return strip_left(raw, raw_poly, beta);
}

BispectralPair make_pair(const DarbouxCertificate& cert) {
  BispectralPair pair;
  pair.cert = cert;
  pair.Pb = involute_P(cert.P, cert.g, cert.beta);
  pair.Qb = involute_Q(cert.Q, cert.f, cert.beta);
  pair.L = cert.P * cert.Q;
  pair.Lambda = (pair.Pb.op * pair.Qb.op).with_var('z');
  pair.h = cert.h;
  auto th = (pair.Pb.poly * pair.Qb.poly).deflate(cert.beta.N);
  if (!th) fail(ErrorKind::kShape, "f_b g_b is not a polynomial in x^N");
  pair.Theta = *th;
  return pair;
}

namespace {

int window_size(const Window& w) {
  return w.empty() ? 0 : (w.max_x - w.min_x + 1) * (w.max_z - w.min_z + 1);
}

void expect_zero(const WaveSeries& r, const std::string& what) {
  if (auto nz = r.first_nonzero())
    fail(ErrorKind::kVerification,
         what + " residual nonzero at x^" + std::to_string(nz->first.first) + " z^" +
             std::to_string(nz->first.second) + ": " + nz->second.str());
}

}  // namespace

VerifyReport verify_pair(const BispectralPair& pair, int depth) {
  const DarbouxCertificate& cert = pair.cert;
  const BesselIndex& beta = cert.beta;
  const int N = beta.N;
  LeftNormalForm nf = left_normal_form(cert.P, N);
  VerifyReport rep;
  rep.depth = depth > 0 ? depth : default_depth(N, pair.h.degree(), nf.n);

  // Phi = c_P(x) P Psi_beta = c_P(x) g(z) Psi_W with c_P = x^n p_n(x^N).
  const Poly cp = Poly::monomial(Rational(1), nf.n) * nf.p.back().inflate(N);
  const RationalFunction cpf = poly_in_x(cp);
  WaveSeries phi = bessel_wave(beta, rep.depth).apply(cpf * cert.P);

  // L Psi_W = h(z^N) Psi_W  <=>  (c_P L c_P^-1) Phi = h(z^N) Phi.
  auto [Lt, l] = clear_to_laurent(cpf * (pair.L * scalar_op(cpf.inverse())));
  WaveSeries lhs = phi.apply(Lt);
  WaveSeries rhs = phi.times(RationalFunction(l), 'x').times(RationalFunction(pair.h.inflate(N)), 'z');
  WaveSeries rL = lhs - rhs;
  if (rL.window().empty())
    fail(ErrorKind::kTruncationInsufficient, "empty window for the L residual; raise the depth");
  expect_zero(rL, "L");
  rep.window_L = rL.window();

  // Lambda Psi_W = Theta(x^N) Psi_W  <=>  (g Lambda g^-1) Phi = Theta(x^N) Phi.
  const RationalFunction gz(cert.g);
  auto [Mt, e] = clear_to_laurent(
      gz * (pair.Lambda * DiffOp::scalar(gz.inverse(), Form::kEuler, 'z')));
  WaveSeries lhs2 = phi.apply(Mt);
  WaveSeries rhs2 =
      phi.times(RationalFunction(e), 'z').times(RationalFunction(pair.Theta.inflate(N)), 'x');
  WaveSeries rM = lhs2 - rhs2;
  if (rM.window().empty())
    fail(ErrorKind::kTruncationInsufficient, "empty window for the Lambda residual; raise the depth");
  expect_zero(rM, "Lambda");
  rep.window_Lambda = rM.window();
  rep.coefficients_checked = window_size(rep.window_L) + window_size(rep.window_Lambda);
  return rep;
}

ClosedForm closed_form_monomial(const BesselIndex& beta, int d,
                                const linalg::Matrix<Rational>& A) {
  const int N = beta.N;
  ClosedForm out;
  out.gamma = beta_power(beta, d);
  const int M = static_cast<int>(out.gamma.size());
  const int n = static_cast<int>(A.size());
  if (n == 0 || n > M) fail(ErrorKind::kUsage, "kernel matrix must have 1..dN rows");
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != M)
      fail(ErrorKind::kUsage, "kernel matrix rows must have dN entries");

  std::vector<Rational> coef;
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    linalg::Matrix<Rational> minor(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        minor[static_cast<std::size_t>(k)].push_back(
            A[static_cast<std::size_t>(k)][static_cast<std::size_t>(idx[static_cast<std::size_t>(l)])]);
    Rational c = linalg::determinant(minor);
    for (int r = 0; r < n && !c.is_zero(); ++r)
      for (int s = r + 1; s < n; ++s)
        c *= out.gamma[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])] -
             out.gamma[static_cast<std::size_t>(idx[static_cast<std::size_t>(s)])];
    if (!c.is_zero()) {
      out.subsets.push_back(idx);
      coef.push_back(c);
    }
    int i = n - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == M - n + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  if (out.subsets.empty())
    fail(ErrorKind::kRankDeficiency, "every minor det A^I Delta_I vanishes");

  auto gamma_sum = [&](const std::vector<int>& I) {
    Rational s;
    for (int i : I) s += out.gamma[static_cast<std::size_t>(i)];
    return s;
  };
  std::size_t imin = 0;
  for (std::size_t k = 1; k < out.subsets.size(); ++k)
    if (gamma_sum(out.subsets[k]) < gamma_sum(out.subsets[imin])) imin = k;
  out.i_min = out.subsets[imin];
  const Rational base = gamma_sum(out.i_min);

  std::vector<int> pI;
  for (const auto& I : out.subsets) {
    Rational p = gamma_sum(I) - base;
    Rational q = p / Rational(N);
    if (!q.is_integer())
      fail(ErrorKind::kSpecInvalid, "gamma sums differ by " + p.str() + ", not a multiple of N");
    pI.push_back(static_cast<int>(p.to_long()));
  }
  for (std::size_t k = 0; k < coef.size(); ++k)
    out.S += Poly::monomial(coef[k], pI[k]);
  const Rational lc = out.S.leading();
  for (auto& c : coef) c = c / lc;
  out.S = out.S * lc.inverse();

  const DiffOp L = bessel_op(beta);
  const RationalFunction Sinv = RationalFunction(Poly(1), out.S);
  DiffOp num(Form::kEuler), qnum(Form::kEuler), pb(Form::kEuler), qb(Form::kEuler);
  for (std::size_t k = 0; k < out.subsets.size(); ++k) {
    const auto& I = out.subsets[k];
    std::vector<Rational> gI, gC;
    for (int i = 0; i < M; ++i) {
      if (std::find(I.begin(), I.end(), i) != I.end())
        gI.push_back(out.gamma[static_cast<std::size_t>(i)]);
      else
        gC.push_back(out.gamma[static_cast<std::size_t>(i)] - Rational(n));
    }
    const DiffOp LI = index_op(gI), LC = index_op(gC);
    const RationalFunction xp = RationalFunction::monomial(coef[k], pI[k]);
    const DiffOp Lp = power(L, pI[k] / N);
    num += xp * LI;
    qnum += LC * scalar_op(xp);
    pb += RationalFunction(coef[k]) * (LI * Lp);
    qb += RationalFunction(coef[k]) * (Lp * LC);
  }
  out.P = Sinv * num;
  out.Q = qnum * scalar_op(Sinv);
  out.Pb = pb;
  out.Qb = qb;
  out.g = Poly::monomial(Rational(1), n);
  out.f = Poly::monomial(Rational(1), M - n);
  out.gb = out.g * out.S;
  out.fb = out.f * out.S;
  return out;
}

namespace {

// Rational equations "sum_l c_l R_l = -R_e" from operator identities with
// rational-function coefficients.
void append_operator_equations(const std::vector<DiffOp>& R, const DiffOp& target,
                               linalg::Matrix<Rational>& rows, std::vector<Rational>& rhs) {
  int order = target.order();
  for (const auto& r : R) order = std::max(order, r.order());
  for (int k = 0; k <= order; ++k) {
    Poly den(1);
    for (const auto& r : R) den = lcm(den, r.coeff(k).den());
    den = lcm(den, target.coeff(k).den());
    std::vector<Poly> nums;
    for (const auto& r : R) nums.push_back(r.coeff(k).num() * exact_quotient(den, r.coeff(k).den()));
    Poly t = target.coeff(k).num() * exact_quotient(den, target.coeff(k).den());
    int top = t.degree();
    for (const auto& p : nums) top = std::max(top, p.degree());
    for (int e = 0; e <= top; ++e) {
      std::vector<Rational> row;
      bool any = !t.coeff(e).is_zero();
      for (const auto& p : nums) {
        row.push_back(p.coeff(e));
        any = any || !row.back().is_zero();
      }
      if (!any) continue;
      rows.push_back(std::move(row));
      rhs.push_back(-t.coeff(e));
    }
  }
}

std::vector<int> semigroup_generators(const std::vector<int>& degrees, int bound) {
  std::vector<bool> reach(static_cast<std::size_t>(bound) + 1, false);
  reach[0] = true;
  std::vector<int> gens;
  for (int d : degrees) {
    if (d > bound || reach[static_cast<std::size_t>(d)]) continue;
    gens.push_back(d);
    for (int v = d; v <= bound; ++v)
      if (reach[static_cast<std::size_t>(v - d)]) reach[static_cast<std::size_t>(v)] = true;
  }
  return gens;
}

}  // namespace

// TODO: takes minutes at bound 6 for N = 3 kernels with exponents near 10;
// the division search needs a cheaper candidate filter.
SpectralAlgebraReport spectral_algebra(const DiffOp& P, const BesselIndex& beta,
                                       int degree_bound) {
  const int N = beta.N;
  SpectralAlgebraReport rep;
  rep.degree_bound = degree_bound;
  const DiffOp L = bessel_op(beta);
  const DiffOp Pe = P.in(Form::kEuler);
  std::vector<DiffOp> rems;  // remainder of P L^l modulo P on the right
  DiffOp PL = Pe;
  for (int e = 0; e * N <= degree_bound; ++e) {
    if (e > 0) PL = PL * L;
    rems.push_back(left_divide(PL, Pe).remainder);
    if (e == 0) continue;
    std::vector<DiffOp> R(rems.begin(), rems.begin() + e);
    linalg::Matrix<Rational> rows;
    std::vector<Rational> rhs;
    append_operator_equations(R, rems.back(), rows, rhs);
    std::vector<Rational> c(static_cast<std::size_t>(e));
    if (!rows.empty()) {
      auto sol = linalg::solve(rows, rhs, e);
      if (!sol) continue;
      c = *sol;
    }
    c.push_back(Rational(1));
    Poly u(c);
    if (!left_divide(Pe * evaluate(u, L), Pe).remainder.is_zero())
      fail(ErrorKind::kCertification, "spectral witness failed its division check");
    rep.degrees.push_back(N * e);
    rep.witnesses.push_back(u);
  }
  rep.non_lattice = non_lattice_degrees(beta, degree_bound);
  rep.generic = rep.non_lattice.empty();
  // For W = V_beta the off-lattice operators belong to the algebra too.
  std::vector<int> all = rep.degrees;
  if (Pe.order() == 0) {
    all.insert(all.end(), rep.non_lattice.begin(), rep.non_lattice.end());
    std::sort(all.begin(), all.end());
  }
  rep.generators = semigroup_generators(all, degree_bound);
  for (int d : all) rep.rank = std::gcd(rep.rank, d);
  return rep;
}

std::vector<int> spectral_degrees_from_kernel(const NormalizedSpec& spec, int degree_bound) {
  const BesselIndex& beta = spec.spec.beta;
  const int N = beta.N;
  const DiffOp L = bessel_op(beta);
  std::vector<int> out;
  const auto& Z = spec.zero_elements;
  const int n0 = static_cast<int>(Z.size());

  // Per class: group coordinate vectors in the jet basis D_z^k Psi, one branch.
  struct JetBlock {
    Rational mu;
    int dim;
    std::vector<std::vector<Rational>> vecs;
  };
  std::vector<JetBlock> blocks;
  for (const auto& c : spec.classes) {
    JetBlock b{c.lambda_N, c.max_jet + 1, {}};
    for (const auto& g : spec.spec.at_points)
      if (g.lambda.pow(N) == c.lambda_N) {
        std::vector<Rational> v(g.a);
        v.resize(static_cast<std::size_t>(b.dim));
        b.vecs.push_back(std::move(v));
      }
    blocks.push_back(std::move(b));
  }
  auto jet_apply = [N](const JetBlock& b, const std::vector<Rational>& v) {
    std::vector<Rational> r(v.size());
    for (std::size_t l = 0; l < v.size(); ++l)
      for (std::size_t k = l; k < v.size(); ++k)
        if (!v[k].is_zero())
          r[l] += v[k] * binomial(static_cast<long>(k), static_cast<long>(l)) *
                  Rational(N).pow(static_cast<long>(k - l)) * b.mu;
    return r;
  };

  // L^l applied to every generator, l <= e_max.
  const int e_max = degree_bound / N;
  std::vector<std::vector<QuasiPolynomial>> zpow(static_cast<std::size_t>(n0));
  for (int i = 0; i < n0; ++i) {
    zpow[static_cast<std::size_t>(i)].push_back(Z[static_cast<std::size_t>(i)]);
    for (int l = 1; l <= e_max; ++l)
      zpow[static_cast<std::size_t>(i)].push_back(apply(L, zpow[static_cast<std::size_t>(i)].back()));
  }
  std::vector<std::vector<std::vector<std::vector<Rational>>>> jpow;  // [block][vec][l]
  for (const auto& b : blocks) {
    std::vector<std::vector<std::vector<Rational>>> per;
    for (const auto& v : b.vecs) {
      std::vector<std::vector<Rational>> seq{v};
      for (int l = 1; l <= e_max; ++l) seq.push_back(jet_apply(b, seq.back()));
      per.push_back(std::move(seq));
    }
    jpow.push_back(std::move(per));
  }

  for (int e = 1; e <= e_max; ++e) {
    // Unknowns: c_0..c_{e-1}, then the matrices expressing u(L) f_k in the span.
    int cols = e;
    const int zero_off = cols;
    cols += n0 * n0;
    std::vector<int> block_off;
    for (const auto& b : blocks) {
      block_off.push_back(cols);
      cols += static_cast<int>(b.vecs.size() * b.vecs.size());
    }
    linalg::Matrix<Rational> rows;
    std::vector<Rational> rhs;
    for (int k = 0; k < n0; ++k) {
      std::map<QuasiPolynomial::Key, std::pair<std::vector<Rational>, Rational>> eq;
      auto slot = [&](const QuasiPolynomial::Key& key) -> auto& {
        auto& s = eq[key];
        if (s.first.empty()) s.first.resize(static_cast<std::size_t>(cols));
        return s;
      };
      for (const auto& [key, c] : zpow[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)].terms())
        slot(key).second -= c;
      for (int l = 0; l < e; ++l)
        for (const auto& [key, c] : zpow[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)].terms())
          slot(key).first[static_cast<std::size_t>(l)] += c;
      for (int j = 0; j < n0; ++j)
        for (const auto& [key, c] : Z[static_cast<std::size_t>(j)].terms())
          slot(key).first[static_cast<std::size_t>(zero_off + k * n0 + j)] -= c;
      for (auto& [key, s] : eq) {
        rows.push_back(std::move(s.first));
        rhs.push_back(s.second);
      }
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& vecs = blocks[b].vecs;
      const int m = static_cast<int>(vecs.size());
      for (int k = 0; k < m; ++k)
        for (int pos = 0; pos < blocks[b].dim; ++pos) {
          std::vector<Rational> row(static_cast<std::size_t>(cols));
          for (int l = 0; l < e; ++l)
            row[static_cast<std::size_t>(l)] = jpow[b][static_cast<std::size_t>(k)][static_cast<std::size_t>(l)][static_cast<std::size_t>(pos)];
          for (int j = 0; j < m; ++j)
            row[static_cast<std::size_t>(block_off[b] + k * m + j)] = -vecs[static_cast<std::size_t>(j)][static_cast<std::size_t>(pos)];
          rows.push_back(std::move(row));
          rhs.push_back(-jpow[b][static_cast<std::size_t>(k)][static_cast<std::size_t>(e)][static_cast<std::size_t>(pos)]);
        }
    }
    if (rows.empty() || linalg::solve(rows, rhs, cols)) out.push_back(N * e);
  }
  return out;
}

std::vector<int> non_lattice_degrees(const BesselIndex& beta, int bound) {
  const int N = beta.N;
  std::vector<int> out;
  const DiffOp L = bessel_op(beta);
  for (int m = 1; m <= bound; ++m) {
    if (m % N == 0) continue;
    const int K = 2 * m + 2 * N + 16;
    auto a = wave_coeffs(beta, K);
    // v_j = (D + t)^j phi, phi = sum_k a_k t^-k; v_j exact for exponents >= -K + j.
    std::vector<std::map<int, Rational>> v(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= K; ++k)
      if (!a[static_cast<std::size_t>(k)].is_zero()) v[0][-k] = a[static_cast<std::size_t>(k)];
    for (int j = 1; j <= m; ++j) {
      for (const auto& [e, c] : v[static_cast<std::size_t>(j - 1)]) {
        if (e != 0) v[static_cast<std::size_t>(j)][e] += c * Rational(e);
        v[static_cast<std::size_t>(j)][e + 1] += c;
      }
    }
    auto at = [&](int j, int e) {
      auto it = v[static_cast<std::size_t>(j)].find(e);
      return it == v[static_cast<std::size_t>(j)].end() ? Rational(0) : it->second;
    };
    linalg::Matrix<Rational> rows;
    std::vector<Rational> rhs;
    for (int e = m; e >= -K + m; --e) {
      std::vector<Rational> row;
      for (int j = 0; j < m; ++j) row.push_back(at(j, e));
      rows.push_back(std::move(row));
      Rational t = m - e <= K ? a[static_cast<std::size_t>(m - e)] : Rational(0);
      rhs.push_back(t - at(m, e));
    }
    auto sol = linalg::solve(rows, rhs, m);
    if (!sol) continue;
    std::vector<Rational> r = *sol;
    r.push_back(Rational(1));
    DiffOp R = RationalFunction::monomial(1, -m) * DiffOp::polynomial_in_euler(Poly(r));
    if (R * L == L * R) out.push_back(m);
  }
  return out;
}

BetaPrime beta_prime(const BesselIndex& beta, const std::vector<QuasiPolynomial>& kernel) {
  const int N = beta.N;
  const int n = static_cast<int>(kernel.size());
  BetaPrime out;
  out.counts.assign(static_cast<std::size_t>(N), 0);
  auto associable = [&](const QuasiPolynomial& f, int s) {
    for (const auto& [key, c] : f.terms()) {
      Rational q = (key.first - beta.beta[static_cast<std::size_t>(s)]) / Rational(N);
      if (!q.is_integer() || q.sign() < 0) return false;
    }
    return true;
  };
  // class representative: the smallest beta_s (first index on ties) in the class
  auto same_class = [&](int s, int t) {
    return ((beta.beta[static_cast<std::size_t>(s)] - beta.beta[static_cast<std::size_t>(t)]) /
            Rational(N)).is_integer();
  };
  std::vector<int> rep(static_cast<std::size_t>(N));
  for (int s = 0; s < N; ++s) {
    int best = s;
    for (int t = 0; t < N; ++t)
      if (same_class(s, t) && beta.beta[static_cast<std::size_t>(t)] <
                                  beta.beta[static_cast<std::size_t>(best)])
        best = t;
    for (int t = 0; t < best; ++t)
      if (same_class(s, t) && beta.beta[static_cast<std::size_t>(t)] ==
                                  beta.beta[static_cast<std::size_t>(best)])
        best = t;
    rep[static_cast<std::size_t>(s)] = best;
  }
  std::map<int, std::vector<int>> by_class;  // representative -> elements
  for (int k = 0; k < n; ++k) {
    const auto& f = kernel[static_cast<std::size_t>(k)];
    if (f.is_zero()) fail(ErrorKind::kSpecInvalid, "zero kernel element");
    if (!f.is_log_free())
      fail(ErrorKind::kUnsupportedInput, "beta_prime needs a log-free kernel");
    int found = -1;
    for (int s = 0; s < N && found < 0; ++s)
      if (associable(f, s)) found = rep[static_cast<std::size_t>(s)];
    if (found < 0 || !associable(f, found))
      fail(ErrorKind::kSpecInvalid,
           "kernel element " + std::to_string(k) + " is associated to no beta_s");
    out.association.push_back(found);
    out.counts[static_cast<std::size_t>(found)] += 1;
    by_class[found].push_back(k);
  }
  for (const auto& [s, elems] : by_class)
    for (int t = 0; t < N; ++t) {
      if (t == s || !same_class(s, t)) continue;
      bool ok = std::all_of(elems.begin(), elems.end(), [&](int k) {
        return associable(kernel[static_cast<std::size_t>(k)], t);
      });
      if (ok) out.ambiguous = true;
    }
  for (int s = 0; s < N; ++s)
    out.beta_prime.push_back(beta.beta[static_cast<std::size_t>(s)] +
                             Rational(out.counts[static_cast<std::size_t>(s)] * N - n));
  return out;
}

}  // namespace bispec
