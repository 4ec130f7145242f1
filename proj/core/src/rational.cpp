#include "bispec/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "bispec/error.hpp"

namespace bispec {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomain: return "domain error";
    case ErrorKind::kUsage: return "usage error";
    case ErrorKind::kUnsupportedInput: return "unsupported input";
    case ErrorKind::kSpecInvalid: return "spec invalid";
    case ErrorKind::kRankDeficiency: return "rank deficiency";
    case ErrorKind::kShape: return "shape error";
    case ErrorKind::kTruncationInsufficient: return "truncation insufficient";
    case ErrorKind::kCertification: return "certification failure";
    case ErrorKind::kVerification: return "verification failure";
  }
  return "error";
}

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorKind::kDomain, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(ErrorKind::kDomain, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  std::string t(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  return mpz_class(t, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den =
      slash == std::string_view::npos ? "1" : trim(s.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' ||
      den[0] == '+')
    fail(ErrorKind::kUsage, "malformed rational '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) fail(ErrorKind::kDomain, "rational with zero denominator");
  return Rational(parse_integer(num), d);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

long Rational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p())
    fail(ErrorKind::kUsage, "expected a small integer, got " + str());
  return q_.get_num().get_si();
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorKind::kDomain, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::kDomain, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(mpq_class(r));
}

}  // namespace bispec
