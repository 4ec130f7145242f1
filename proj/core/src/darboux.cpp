#include "bispec/darboux.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bispec/error.hpp"
#include "bispec/linalg.hpp"

namespace bispec {

namespace {

QuasiPolynomial zero_seed(const BesselIndex& beta, const AtZeroGroup& grp, std::size_t idx) {
  const std::string where = "at_zero[" + std::to_string(idx) + "]";
  if (grp.terms) {
    if (!grp.b.empty())
      fail(ErrorKind::kSpecInvalid, where + ": give either b or terms, not both");
    return *grp.terms;
  }
  if (grp.base_index < 0 || grp.base_index >= beta.N)
    fail(ErrorKind::kSpecInvalid, where + ": base_index out of range");
  QuasiPolynomial q;
  const Rational& base = beta.beta[static_cast<std::size_t>(grp.base_index)];
  for (std::size_t k = 0; k < grp.b.size(); ++k)
    for (std::size_t j = 0; j < grp.b[k].size(); ++j)
      q.add_term(grp.b[k][j], base + Rational(static_cast<long>(k) * beta.N),
                 static_cast<int>(j));
  return q;
}

void check_seed(const BesselIndex& beta, const QuasiPolynomial& seed, const std::string& where) {
  if (seed.is_zero()) fail(ErrorKind::kSpecInvalid, where + ": zero kernel element");
  std::vector<Rational> exps;
  for (const auto& [key, c] : seed.terms()) {
    const int mult = multiplicity(beta, key.first);
    if (mult == 0)
      fail(ErrorKind::kSpecInvalid, where + ": exponent " + key.first.str() +
                                        " is not in beta_j + N Z_{>=0} for any j");
    if (key.second >= mult)
      fail(ErrorKind::kSpecInvalid, where + ": log power " + std::to_string(key.second) +
                                        " at exponent " + key.first.str() +
                                        " exceeds multiplicity " + std::to_string(mult));
    if (exps.empty() || exps.back() != key.first) exps.push_back(key.first);
  }
  for (std::size_t i = 0; i < exps.size(); ++i)
    for (std::size_t j = i + 1; j < exps.size(); ++j) {
      Rational q = (exps[j] - exps[i]) / Rational(beta.N);
      if (!q.is_integer())
        fail(ErrorKind::kSpecInvalid,
             where + ": exponents " + exps[i].str() + " and " + exps[j].str() +
                 " differ by " + (exps[j] - exps[i]).str() + ", not a multiple of N=" +
                 std::to_string(beta.N));
    }
}

Rational min_exponent(const QuasiPolynomial& q) { return q.terms().begin()->first.first; }

// sum_{gamma} c_{gamma, j} x^(gamma - base) as a polynomial.
Poly log_slice(const QuasiPolynomial& q, const Rational& base, int j) {
  Poly p;
  for (const auto& [key, c] : q.terms()) {
    if (key.second != j) continue;
    Rational e = key.first - base;
    if (!e.is_integer() || e.sign() < 0)
      fail(ErrorKind::kDomain, "log_slice: exponent below the base");
    p += Poly::monomial(c, static_cast<int>(e.to_long()));
  }
  return p;
}

DiffOp euler_op(std::vector<RationalFunction> c) { return DiffOp(Form::kEuler, std::move(c), 'x'); }

}  // namespace

NormalizedSpec validate_spec(const KernelSpec& spec) {
  const BesselIndex& beta = spec.beta;
  BesselIndex::make(beta.beta);  // re-check normalization
  if (beta.N != static_cast<int>(beta.beta.size()))
    fail(ErrorKind::kSpecInvalid, "N does not match the length of beta");
  NormalizedSpec out;
  out.spec = spec;
  const int N = beta.N;

  for (std::size_t g = 0; g < spec.at_zero.size(); ++g) {
    const std::string where = "at_zero[" + std::to_string(g) + "]";
    QuasiPolynomial seed = zero_seed(beta, spec.at_zero[g], g);
    check_seed(beta, seed, where);
    const int j0 = seed.max_log_power();
    if (spec.at_zero[g].j0 && *spec.at_zero[g].j0 != j0)
      fail(ErrorKind::kSpecInvalid, where + ": j0 = " + std::to_string(*spec.at_zero[g].j0) +
                                        " but the seed has log power " + std::to_string(j0));
    if (j0 > 0) out.log_free = false;
    for (int l = 0; l <= j0; ++l) {
      out.zero_elements.push_back(seed);
      seed = seed.log_derivative();
    }
  }
  out.n0 = static_cast<int>(out.zero_elements.size());

  for (std::size_t g = 0; g < spec.at_points.size(); ++g) {
    const auto& grp = spec.at_points[g];
    const std::string where = "at_points[" + std::to_string(g) + "]";
    if (grp.lambda.is_zero())
      fail(ErrorKind::kSpecInvalid, where + ": lambda must be nonzero");
    if (grp.a.empty() || grp.a.back().is_zero())
      fail(ErrorKind::kSpecInvalid, where + ": leading coefficient a_k0 must be nonzero");
    Rational ln = grp.lambda.pow(N);
    auto it = std::find_if(out.classes.begin(), out.classes.end(),
                           [&](const PointClass& c) { return c.lambda_N == ln; });
    if (it == out.classes.end()) {
      out.classes.push_back(PointClass{grp.lambda, ln, 0, 0, 0});
      it = out.classes.end() - 1;
    }
    it->groups += 1;
    it->max_jet = std::max(it->max_jet, static_cast<int>(grp.a.size()) - 1);
  }

  out.n = out.n0;
  for (const auto& c : out.classes) out.n += N * c.groups;
  if (out.n == 0) fail(ErrorKind::kSpecInvalid, "empty kernel");

  // h(w) = w^d0 prod (w - lambda_j^N)^d_j, minimal with ker P in ker h(L_beta)
  // and g | h(z^N).
  int d0 = 0;
  if (out.n0 > 0) {
    d0 = (out.n0 + N - 1) / N;
    for (const auto& e : out.zero_elements)
      for (const auto& [key, c] : e.terms())
        d0 = std::max(d0, annihilating_power(beta, key.first, key.second));
  }
  out.h_factors.d0 = d0;
  for (auto& c : out.classes) {
    c.depth = std::max(c.groups, c.max_jet + 1);
    out.h_factors.points.emplace_back(c.lambda, c.depth);
  }
  out.h = h_polynomial(out.h_factors, N);

  out.g = Poly::monomial(Rational(1), out.n0);
  for (const auto& c : out.classes)
    out.g = out.g * (Poly::monomial(Rational(1), N) - Poly(c.lambda_N)).pow(c.groups);
  out.f = exact_quotient(out.h.inflate(N), out.g);
  return out;
}

LeftNormalForm left_normal_form(const DiffOp& P, int N) {
  if (P.is_zero()) fail(ErrorKind::kShape, "zero operator has no normal form");
  DiffOp e = P.in(Form::kEuler);
  const int n = e.order();
  if (e.leading() != RationalFunction::monomial(1, -n))
    fail(ErrorKind::kShape, "leading coefficient of P in D-form is " + e.leading().str() +
                                ", expected x^-" + std::to_string(n));
  std::vector<RationalFunction> r;
  Poly den(1);
  for (int k = 0; k <= n; ++k) {
    auto d = (e.coeff(k) * RationalFunction::monomial(1, n)).deflate(N);
    if (!d)
      fail(ErrorKind::kShape, "x^n c_" + std::to_string(k) + " is not a function of x^" +
                                  std::to_string(N));
    r.push_back(*d);
    if (!d->is_zero()) den = lcm(den, d->den());
  }
  LeftNormalForm out{n, {}};
  for (const auto& c : r)
    out.p.push_back(c.is_zero() ? Poly() : c.num() * exact_quotient(den, c.den()));
  return out;
}

std::vector<RationalFunction> right_coefficients(const DiffOp& a) {
  DiffOp rem = a.in(Form::kEuler);
  std::vector<RationalFunction> r(static_cast<std::size_t>(std::max(rem.order() + 1, 0)));
  while (!rem.is_zero()) {
    const int s = rem.order();
    RationalFunction top = rem.leading();
    r[static_cast<std::size_t>(s)] = top;
    std::vector<RationalFunction> ds(static_cast<std::size_t>(s) + 1);
    ds.back() = RationalFunction(1);
    DiffOp term = DiffOp(Form::kEuler, ds, rem.var()) * DiffOp::scalar(top, Form::kEuler, rem.var());
    DiffOp next = rem - term;
    if (!next.is_zero() && next.order() >= s)
      fail(ErrorKind::kDomain, "right_coefficients: leading term did not cancel");
    rem = std::move(next);
  }
  return r;
}

RightNormalForm right_normal_form(const DiffOp& Q, int N) {
  if (Q.is_zero()) fail(ErrorKind::kShape, "zero operator has no normal form");
  auto r = right_coefficients(Q);
  const int m = static_cast<int>(r.size()) - 1;
  if (r.back() != RationalFunction::monomial(1, -m))
    fail(ErrorKind::kShape, "leading right coefficient of Q is " + r.back().str() +
                                ", expected x^-" + std::to_string(m));
  std::vector<RationalFunction> d;
  Poly den(1);
  for (int s = 0; s <= m; ++s) {
    auto v = (r[static_cast<std::size_t>(s)] * RationalFunction::monomial(1, m)).deflate(N);
    if (!v)
      fail(ErrorKind::kShape, "x^m r_" + std::to_string(s) + " is not a function of x^" +
                                  std::to_string(N));
    d.push_back(*v);
    if (!v->is_zero()) den = lcm(den, v->den());
  }
  RightNormalForm out{m, {}};
  for (const auto& c : d)
    out.q.push_back(c.is_zero() ? Poly() : c.num() * exact_quotient(den, c.den()));
  return out;
}

DiffOp build_P_monomial(const NormalizedSpec& spec) {
  if (!spec.monomial())
    fail(ErrorKind::kUsage, "build_P_monomial needs a kernel supported at 0 only");
  const int n = spec.n;
  using RF = RationalFunction;
  linalg::Matrix<RF> m;
  std::vector<RF> rhs;
  for (const auto& f : spec.zero_elements) {
    Rational base = min_exponent(f);
    std::vector<QuasiPolynomial> dk{f};
    for (int k = 1; k <= n; ++k) dk.push_back(dk.back().euler());
    for (int j = 0; j <= f.max_log_power(); ++j) {
      std::vector<RF> row;
      for (int k = 0; k < n; ++k) row.emplace_back(log_slice(dk[static_cast<std::size_t>(k)], base, j));
      RF b(-log_slice(dk[static_cast<std::size_t>(n)], base, j));
      bool any = !b.is_zero();
      for (const auto& v : row) any = any || !v.is_zero();
      if (!any) continue;
      m.push_back(std::move(row));
      rhs.push_back(std::move(b));
    }
  }
  if (linalg::rank(m, n) < n)
    fail(ErrorKind::kRankDeficiency, "kernel elements are linearly dependent");
  auto sol = linalg::solve(m, rhs, n);
  if (!sol) fail(ErrorKind::kRankDeficiency, "no monic annihilator of the kernel");
  std::vector<RF> c;
  for (int k = 0; k < n; ++k)
    c.push_back(RF::monomial(1, -n) * (*sol)[static_cast<std::size_t>(k)]);
  c.push_back(RF::monomial(1, -n));
  return euler_op(std::move(c));
}

int default_depth(int N, int deg_h, int n) { return 2 * (deg_h * N + n) + 8; }

namespace {

// Kernel generators in a form the linear solve can consume.
struct SeriesElements {
  std::vector<std::vector<QuasiPolynomial>> exact;  // D^k f, k = 0..n
  std::vector<std::vector<ExpSeries>> series;       // D^k F, k = 0..n
};

SeriesElements series_elements(const NormalizedSpec& spec, int depth) {
  SeriesElements out;
  const int n = spec.n;
  for (const auto& f : spec.zero_elements) {
    std::vector<QuasiPolynomial> dk{f};
    for (int k = 1; k <= n; ++k) dk.push_back(dk.back().euler());
    out.exact.push_back(std::move(dk));
  }
  const BesselIndex& beta = spec.spec.beta;
  for (const auto& grp : spec.spec.at_points) {
    const int k0 = static_cast<int>(grp.a.size()) - 1;
    for (int i = 0; i < beta.N; ++i) {
      PointJet jet = wave_jet_at(beta, grp.lambda, i, k0, depth);
      std::optional<ExpSeries> F;
      for (int k = 0; k <= k0; ++k) {
        if (grp.a[static_cast<std::size_t>(k)].is_zero()) continue;
        ExpSeries t = jet.jets[static_cast<std::size_t>(k)].scaled(grp.a[static_cast<std::size_t>(k)]);
        F = F ? *F + t : t;
      }
      std::vector<ExpSeries> dk{*F};
      for (int k = 1; k <= n; ++k) dk.push_back(dk.back().euler_step());
      out.series.push_back(std::move(dk));
    }
  }
  return out;
}

// Rows of "sum_{k,t} p_{k,t} x^{Nt} D^k F = 0" for the ansatz of bound B.
// `examined` counts every coefficient equation, including the trivial ones.
linalg::Matrix<Rational> ansatz_rows(const SeriesElements& el, int n, int N, int B,
                                     int* examined = nullptr) {
  const int cols = (n + 1) * (B + 1);
  auto col = [B](int k, int t) { return static_cast<std::size_t>(k * (B + 1) + t); };
  linalg::Matrix<Rational> rows;
  for (const auto& dk : el.exact) {
    std::map<QuasiPolynomial::Key, std::vector<Rational>> eq;
    for (int k = 0; k <= n; ++k)
      for (int t = 0; t <= B; ++t)
        for (const auto& [key, c] : dk[static_cast<std::size_t>(k)].terms()) {
          auto& row = eq[{key.first + Rational(N * t), key.second}];
          if (row.empty()) row.resize(static_cast<std::size_t>(cols));
          row[col(k, t)] += c;
        }
    for (auto& [key, row] : eq) rows.push_back(std::move(row));
  }
  for (const auto& dk : el.series) {
    const int phi = dk[0].rate().field()->degree();
    int lo = dk[0].valid_min() + n + N * B;
    int hi = dk[static_cast<std::size_t>(n)].max_degree() + N * B;
    for (int e = lo; e <= hi; ++e) {
      std::vector<std::vector<Rational>> block(static_cast<std::size_t>(phi),
                                               std::vector<Rational>(static_cast<std::size_t>(cols)));
      for (int k = 0; k <= n; ++k) {
        const ExpSeries& s = dk[static_cast<std::size_t>(k)];
        for (int t = 0; t <= B; ++t) {
          int src = e - N * t;
          if (src > s.max_degree()) continue;
          auto coords = s.coeff(src).coords();
          for (int c = 0; c < phi && c < static_cast<int>(coords.size()); ++c)
            block[static_cast<std::size_t>(c)][col(k, t)] = coords[static_cast<std::size_t>(c)];
        }
      }
      for (auto& r : block) rows.push_back(std::move(r));
    }
  }
  if (examined) *examined = static_cast<int>(rows.size());
  std::erase_if(rows, [](const std::vector<Rational>& r) {
    return std::all_of(r.begin(), r.end(), [](const Rational& v) { return v.is_zero(); });
  });
  return rows;
}

}  // namespace

DiffOp build_P_general(const NormalizedSpec& spec, const BuildOptions& opts, BuildStats* stats) {
  if (!spec.log_free)
    fail(ErrorKind::kUnsupportedInput,
         "log-bearing kernels are only supported for kernels supported at 0");
  const int n = spec.n;
  const int N = spec.spec.beta.N;
  int K = opts.depth > 0 ? opts.depth : default_depth(N, spec.h.degree(), n);
  const int B0 = std::max(1, n * spec.h.degree());

  for (int attempt = 0; attempt < 8; ++attempt) {
    SeriesElements el = series_elements(spec, K);
    // Elements supported at 0 give exact equations; depth adds nothing.
    const bool exact_only = el.series.empty();
    auto null_at = [&](int B, bool& enough) {
      int examined = 0;
      auto rows = ansatz_rows(el, n, N, B, &examined);
      const int cols = (n + 1) * (B + 1);
      enough = exact_only || examined >= cols + 5;
      return linalg::nullspace(rows, cols);
    };
    bool enough = true;
    int hi = B0;
    std::vector<std::vector<Rational>> ns;
    for (;;) {
      ns = null_at(hi, enough);
      if (!enough || !ns.empty() || hi >= opts.max_degree_bound) break;
      hi = std::min(hi * 2, opts.max_degree_bound);
    }
    if (!enough) {
      K *= 2;
      if (K > opts.max_depth)
        fail(ErrorKind::kTruncationInsufficient, "series depth limit reached");
      continue;
    }
    if (ns.empty())
      fail(ErrorKind::kCertification,
           "no annihilator up to degree bound " + std::to_string(opts.max_degree_bound));
    // smallest bound with a nonzero null space
    int lo = 0, top = hi;
    while (lo < top) {
      int mid = (lo + top) / 2;
      bool e2 = true;
      auto v = null_at(mid, e2);
      if (!v.empty()) top = mid;
      else lo = mid + 1;
    }
    const int best = lo;
    ns = null_at(best, enough);
    if (ns.size() != 1 && exact_only)
      fail(ErrorKind::kRankDeficiency, "no unique monic annihilator of the kernel");
    if (ns.size() != 1 || !enough) {
      K *= 2;
      if (K > opts.max_depth)
        fail(ErrorKind::kTruncationInsufficient, "series depth limit reached");
      continue;
    }
    const auto& v = ns[0];
    std::vector<Poly> p;
    for (int k = 0; k <= n; ++k) {
      std::vector<Rational> c(v.begin() + k * (best + 1), v.begin() + (k + 1) * (best + 1));
      p.emplace_back(std::move(c));
    }
    if (p[static_cast<std::size_t>(n)].is_zero()) {
      K *= 2;
      continue;
    }
    Rational lc = p[static_cast<std::size_t>(n)].leading();
    for (auto& q : p) q = q * lc.inverse();
    RationalFunction pre = RationalFunction(Poly(1), p[static_cast<std::size_t>(n)].inflate(N) *
                                                         Poly::monomial(Rational(1), n));
    std::vector<RationalFunction> c;
    for (const auto& q : p) c.push_back(pre * RationalFunction(q.inflate(N)));
    DiffOp P = euler_op(std::move(c));
    if (stats) {
      stats->degree_bound = best;
      stats->depth = K;
      stats->unknowns = (n + 1) * (best + 1);
      ansatz_rows(el, n, N, best, &stats->equations);
    }
    Division d = left_divide(evaluate(spec.h, bessel_op(spec.spec.beta)), P);
    if (d.remainder.is_zero()) return P;
    K *= 2;
  }
  fail(ErrorKind::kSpecInvalid, "inconsistent spec: no candidate P divides h(L_beta)");
}

DiffOp compute_Q(const DiffOp& P, const Poly& h, const BesselIndex& beta) {
  DiffOp H = evaluate(h, bessel_op(beta));
  Division d = left_divide(H, P);
  if (!d.remainder.is_zero())
    fail(ErrorKind::kCertification, "remainder nonzero: P does not divide h(L_beta)");
  return d.quotient;
}

DarbouxCertificate certify(const BesselIndex& beta, const DiffOp& P, const DiffOp& Q,
                           const Poly& f, const Poly& g, const std::optional<Poly>& expected_g,
                           int depth) {
  const int N = beta.N;
  DarbouxCertificate cert{beta, P, Q, f, g, Poly(), 0, {}};
  Witnesses& w = cert.witnesses;

  auto hd = (f * g).deflate(N);
  if (!hd || f.is_zero() || g.is_zero())
    fail(ErrorKind::kCertification, "f g is not a polynomial in z^N");
  cert.h = *hd;
  w.fg_equals_h = true;

  DiffOp H = evaluate(cert.h, bessel_op(beta));
  if (!(multiply_in(Form::kDel, Q, P) == H))
    fail(ErrorKind::kCertification, "remainder nonzero: QP != h(L_beta)");
  w.qp_equals_h = true;
  if (!(multiply_in(Form::kEuler, Q, P) == H))
    fail(ErrorKind::kCertification, "QP mismatch between the two multiplication paths");
  w.qp_cross_checked = true;

  LeftNormalForm nf;
  try {
    nf = left_normal_form(P, N);
  } catch (const Error& e) {
    fail(ErrorKind::kCertification, std::string("P is not in normal form: ") + e.what());
  }
  w.p_normal_form = true;
  const int n = nf.n;

  const int v = g.valuation();
  if (g.degree() != n || !g.shift_down(v).deflate(N) || !g.leading().is_one())
    fail(ErrorKind::kCertification, "g is not z^n0 G(z^N) of degree order(P)");
  w.g_product_form = true;
  if (expected_g) {
    if (g != *expected_g)
      fail(ErrorKind::kCertification, "g = " + g.str("z") + " differs from the kernel value " +
                                          expected_g->str("z"));
    w.g_matches_spec = true;
  }

  // e^{-xz} Psi_W = e^{-xz} (x^n p_n(x^N))^-1 Ptilde Psi_beta / g(z) -> 1.
  cert.depth = depth > 0 ? depth : default_depth(N, cert.h.degree(), n);
  const Poly& pn = nf.p[static_cast<std::size_t>(n)];
  DiffOp Pt = RationalFunction(pn.inflate(N) * Poly::monomial(Rational(1), n)) * P;
  WaveSeries phi = bessel_wave(beta, cert.depth).apply(Pt);
  const Window& win = phi.window();
  const int T = n + N * pn.degree();
  if (win.min_z > 0 || win.max_z < n || win.min_x > T)
    fail(ErrorKind::kTruncationInsufficient, "series too short for the normalization check");
  for (int j = win.min_z; j <= win.max_z; ++j) {
    for (int i = T + 1; i <= win.max_x; ++i)
      if (!phi.coeff(i, j).is_zero())
        fail(ErrorKind::kCertification, "formal limit of e^{-xz} Psi_W does not exist at z^" +
                                            std::to_string(j));
    Rational limit = phi.coeff(T, j) / pn.leading();
    Rational want = j >= 0 ? g.coeff(j) : Rational(0);
    if (limit != want)
      fail(ErrorKind::kCertification, "formal limit of e^{-xz} Psi_W is not 1 at z^" +
                                          std::to_string(j));
  }
  w.normalization_window = win.max_z - win.min_z + 1;
  w.normalized = true;
  return cert;
}

BuildResult build(const KernelSpec& spec, const BuildOptions& opts) {
  BuildResult r;
  r.spec = validate_spec(spec);
  DiffOp P;
  if (r.spec.monomial()) {
    P = build_P_monomial(r.spec);
    r.stats.depth = opts.depth > 0 ? opts.depth
                                   : default_depth(spec.beta.N, r.spec.h.degree(), r.spec.n);
  } else {
    P = build_P_general(r.spec, opts, &r.stats);
  }
  DiffOp Q = compute_Q(P, r.spec.h, spec.beta);
  r.certificate = certify(spec.beta, P, Q, r.spec.f, r.spec.g, r.spec.g, r.stats.depth);
  return r;
}

bool annihilates_kernel(const DiffOp& P, const NormalizedSpec& spec, int depth) {
  const DiffOp Pt = clear_to_laurent(P).first;
  for (const auto& f : spec.zero_elements)
    if (!apply(Pt, f).is_zero()) return false;
  if (spec.spec.at_points.empty()) return true;
  SeriesElements el = series_elements(spec, depth);
  for (const auto& dk : el.series)
    if (!dk[0].apply(Pt).coeffs().empty()) return false;
  return true;
}

}  // namespace bispec
