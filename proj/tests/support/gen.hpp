#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "bispec/bispectral.hpp"
#include "bispec/error.hpp"
#include "bispec/golden.hpp"

namespace bispec {

// Readable gtest failure messages.
inline void PrintTo(const Rational& r, std::ostream* os) { *os << r.str(); }
inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const RationalFunction& f, std::ostream* os) { *os << f.str(); }
inline void PrintTo(const DiffOp& a, std::ostream* os) {
  *os << to_string(a.form()) << "[" << a.var() << "] " << a.str();
}
inline void PrintTo(const QuasiPolynomial& q, std::ostream* os) { *os << q.str(); }

}  // namespace bispec

namespace bispec::testing {

// Seeded generators for randomized exact checks.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(int span = 6, int max_den = 4) {
    return Rational(integer(-span, span), integer(1, max_den));
  }
  Rational nonzero(int span = 6, int max_den = 4) {
    Rational r;
    do r = rational(span, max_den);
    while (r.is_zero());
    return r;
  }

  Poly poly(int max_deg, int span = 5) {
    std::vector<Rational> c(static_cast<std::size_t>(integer(0, max_deg)) + 1);
    for (auto& v : c) v = rational(span, 3);
    return Poly(std::move(c));
  }

  // Laurent coefficient c x^k sums with k in [lo, hi].
  RationalFunction laurent(int lo, int hi) {
    RationalFunction f;
    for (int k = lo; k <= hi; ++k)
      if (coin()) f += RationalFunction::monomial(rational(4, 3), k);
    return f;
  }

  // num / den with den of degree <= 2 and no root at the origin forced.
  RationalFunction rational_function(int max_deg = 2) {
    Poly den;
    do den = poly(max_deg, 3);
    while (den.is_zero());
    return RationalFunction(poly(max_deg, 4), den);
  }

  DiffOp op(int max_order, bool laurent_only, Form form = Form::kDel, char var = 'x') {
    int n = integer(0, max_order);
    std::vector<RationalFunction> c(static_cast<std::size_t>(n) + 1);
    for (auto& v : c) v = laurent_only ? laurent(-2, 2) : rational_function();
    c.back() = laurent_only ? RationalFunction::monomial(nonzero(3, 2), integer(-1, 1))
                            : RationalFunction(Poly(nonzero(3, 2)));
    return DiffOp(form, std::move(c), var);
  }

  QuasiPolynomial quasi(int terms = 3, int max_log = 2) {
    QuasiPolynomial q;
    for (int t = 0; t < terms; ++t) q.add_term(nonzero(4, 3), rational(6, 3), integer(0, max_log));
    return q;
  }

  // Random normalized index: the last entry absorbs the sum constraint.
  BesselIndex beta(int N, int max_den = 3) {
    std::vector<Rational> b;
    Rational sum;
    for (int i = 0; i + 1 < N; ++i) {
      b.push_back(rational(6, max_den));
      sum += b.back();
    }
    b.push_back(Rational(N * (N - 1), 2) - sum);
    return BesselIndex::make(std::move(b));
  }

  // beta with pairwise differences outside Z (fractional parts distinct).
  BesselIndex generic_beta(int N) {
    for (;;) {
      BesselIndex b = beta(N, 7);
      bool ok = true;
      for (std::size_t i = 0; i < b.beta.size(); ++i)
        for (std::size_t j = i + 1; j < b.beta.size(); ++j)
          ok = ok && !(b.beta[i] - b.beta[j]).is_integer();
      if (ok) return b;
    }
  }

  // Log-free monomial kernel: rows of A over gamma = beta^d, each row
  // supported on one residue class mod N, A of full row rank, spec valid,
  // d minimal for the kernel.
  struct MonomialCase {
    BesselIndex beta;
    int d = 1;
    linalg::Matrix<Rational> A;
    KernelSpec spec() const { return golden::monomial_spec(beta, d, A); }
  };

  MonomialCase monomial_case(int max_N = 3, int max_d = 2, int max_n = 3) {
    for (;;) {
      MonomialCase c;
      const int N = integer(1, max_N);
      c.d = integer(1, max_d);
      c.beta = beta(N, 3);
      auto gamma = beta_power(c.beta, c.d);
      bool distinct = true;
      for (std::size_t i = 0; i < gamma.size(); ++i)
        for (std::size_t j = i + 1; j < gamma.size(); ++j) distinct = distinct && !(gamma[i] == gamma[j]);
      if (!distinct) continue;
      const int cols = static_cast<int>(gamma.size());
      const int n = integer(1, std::min(max_n, cols));
      for (int r = 0; r < n; ++r) {
        std::vector<Rational> row(gamma.size());
        const auto c0 = static_cast<std::size_t>(integer(0, cols - 1));
        row[c0] = nonzero(4, 2);
        for (std::size_t j = 0; j < gamma.size(); ++j) {
          Rational diff = (gamma[j] - gamma[c0]) / Rational(N);
          if (j != c0 && diff.is_integer() && coin()) row[j] = rational(4, 2);
        }
        c.A.push_back(row);
      }
      if (linalg::rank(c.A, cols) != n) continue;
      int d0 = 0;
      try {
        d0 = validate_spec(c.spec()).h.degree();
      } catch (const Error&) {
        continue;
      }
      // Same kernel written over beta^d0, d0 the smallest block depth.
      if (d0 < c.d) {
        for (auto& row : c.A) {
          std::vector<Rational> cut;
          for (int i = 0; i < N; ++i)
            for (int j = 0; j < d0; ++j) cut.push_back(row[static_cast<std::size_t>(i * c.d + j)]);
          row = std::move(cut);
        }
        c.d = d0;
      }
      return c;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bispec::testing
