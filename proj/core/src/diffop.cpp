#include "bispec/diffop.hpp"

#include <sstream>

#include "bispec/error.hpp"

namespace bispec {

const char* to_string(Form f) { return f == Form::kDel ? "del" : "euler"; }

DiffOp::DiffOp(Form form, char var) : form_(form), var_(var) {}

DiffOp::DiffOp(Form form, std::vector<RationalFunction> coeffs, char var)
    : form_(form), var_(var), c_(std::move(coeffs)) {
  strip();
}

void DiffOp::strip() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DiffOp DiffOp::scalar(const RationalFunction& f, Form form, char var) {
  return DiffOp(form, {f}, var);
}

DiffOp DiffOp::del(char var) {
  return DiffOp(Form::kDel, {RationalFunction(0), RationalFunction(1)}, var);
}

DiffOp DiffOp::euler(char var) {
  return DiffOp(Form::kEuler, {RationalFunction(0), RationalFunction(1)}, var);
}

DiffOp DiffOp::polynomial_in_euler(const Poly& p, char var) {
  std::vector<RationalFunction> c;
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return DiffOp(Form::kEuler, std::move(c), var);
}

RationalFunction DiffOp::coeff(int k) const {
  if (k < 0 || k > order()) return {};
  return c_[static_cast<std::size_t>(k)];
}

const RationalFunction& DiffOp::leading() const {
  if (c_.empty()) fail(ErrorKind::kDomain, "leading coefficient of zero operator");
  return c_.back();
}

bool DiffOp::has_laurent_coefficients() const {
  for (const auto& c : c_)
    if (!c.is_laurent()) return false;
  return true;
}

namespace {

void check_var(const DiffOp& a, const DiffOp& b) {
  if (a.var() != b.var())
    fail(ErrorKind::kUsage, std::string("operators in different variables: ") +
                                a.var() + " vs " + b.var());
}

// Derivation attached to the form: d/dx for kDel, x d/dx for kEuler.
RationalFunction derive(Form form, const RationalFunction& f) {
  return form == Form::kDel ? f.derivative() : f.euler();
}

// Both forms share the Leibniz rule B^i f = sum_l C(i,l) (delta^l f) B^(i-l)
// with delta the matching derivation.
DiffOp multiply_same_form(const DiffOp& a, const DiffOp& b) {
  Form form = a.form();
  if (a.is_zero() || b.is_zero()) return DiffOp(form, a.var());
  int ma = a.order(), mb = b.order();
  std::vector<RationalFunction> out(static_cast<std::size_t>(ma + mb + 1));
  for (int j = 0; j <= mb; ++j) {
    // derivatives of b_j up to order ma
    std::vector<RationalFunction> d{b.coeffs()[static_cast<std::size_t>(j)]};
    if (d[0].is_zero()) continue;
    for (int l = 1; l <= ma; ++l) d.push_back(derive(form, d.back()));
    for (int i = 0; i <= ma; ++i) {
      const auto& ai = a.coeffs()[static_cast<std::size_t>(i)];
      if (ai.is_zero()) continue;
      for (int l = 0; l <= i; ++l) {
        const auto& dl = d[static_cast<std::size_t>(l)];
        if (dl.is_zero()) continue;
        out[static_cast<std::size_t>(i - l + j)] +=
            ai * dl * RationalFunction(binomial(i, l));
      }
    }
  }
  return DiffOp(form, std::move(out), a.var());
}

}  // namespace

DiffOp multiply_in(Form form, const DiffOp& a, const DiffOp& b) {
  check_var(a, b);
  return multiply_same_form(a.in(form), b.in(form));
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  check_var(a, b);
  if (b.form() == a.form()) return multiply_same_form(a, b);
  return multiply_same_form(a, b.in(a.form()));
}

DiffOp operator*(const RationalFunction& f, const DiffOp& a) {
  std::vector<RationalFunction> c;
  c.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) c.push_back(f * x);
  return DiffOp(a.form(), std::move(c), a.var());
}

DiffOp DiffOp::in(Form target) const {
  if (target == form_) return *this;
  // Del -> Euler uses d = x^-1 D; Euler -> Del uses D = x d.
  DiffOp basis =
      target == Form::kEuler
          ? DiffOp(Form::kEuler, {RationalFunction(0), RationalFunction::monomial(1, -1)}, var_)
          : DiffOp(Form::kDel, {RationalFunction(0), RationalFunction::monomial(1, 1)}, var_);
  DiffOp acc(target, var_);
  DiffOp pw = identity(target, var_);
  for (int k = 0; k <= order(); ++k) {
    if (k > 0) pw = multiply_same_form(pw, basis);
    const auto& ck = c_[static_cast<std::size_t>(k)];
    if (!ck.is_zero()) acc += ck * pw;
  }
  return acc;
}

DiffOp DiffOp::with_var(char var) const {
  DiffOp r = *this;
  r.var_ = var;
  return r;
}

DiffOp DiffOp::adjoint() const {
  if (form_ == Form::kEuler) return in(Form::kDel).adjoint().in(Form::kEuler);
  // (a d^k)* = (-1)^k d^k a = (-1)^k sum_l C(k,l) a^(l) d^(k-l)
  std::vector<RationalFunction> out(c_.size());
  for (int k = 0; k <= order(); ++k) {
    RationalFunction d = c_[static_cast<std::size_t>(k)];
    if (d.is_zero()) continue;
    Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    for (int l = 0; l <= k; ++l) {
      if (l > 0) d = d.derivative();
      if (d.is_zero()) break;
      out[static_cast<std::size_t>(k - l)] +=
          d * RationalFunction(sign * binomial(k, l));
    }
  }
  return DiffOp(Form::kDel, std::move(out), var_);
}

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  check_var(*this, o);
  if (o.form_ != form_) return *this += o.in(form_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  strip();
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) { return *this += -o; }

bool operator==(const DiffOp& a, const DiffOp& b) {
  if (a.var() != b.var()) return false;
  if (a.form() != b.form()) return a.coeffs() == b.in(a.form()).coeffs();
  return a.coeffs() == b.coeffs();
}

std::string DiffOp::str() const {
  if (c_.empty()) return "0";
  std::string sym = std::string(form_ == Form::kDel ? "d" : "D") + var_;
  std::ostringstream os;
  bool first = true;
  for (int k = order(); k >= 0; --k) {
    const auto& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    RationalFunction shown = c;
    std::string cs = c.str(std::string(1, var_));
    if (!first) {
      RationalFunction negated = RationalFunction(-1) * c;
      std::string neg = negated.str(std::string(1, var_));
      if (cs.size() > 1 && cs[0] == '-' && cs.substr(1) == neg) {
        os << " - ";
        cs = neg;
        shown = negated;
      } else {
        os << " + ";
      }
    }
    first = false;
    if (k == 0) {
      os << cs;
      continue;
    }
    if (!(shown.is_constant() && shown.constant_value().is_one()))
      os << (shown.is_constant() && shown.constant_value().sign() > 0 ? cs : "(" + cs + ")")
         << "*";
    os << sym;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Division left_divide(const DiffOp& a, const DiffOp& p) {
  check_var(a, p);
  if (p.is_zero()) fail(ErrorKind::kDomain, "division by the zero operator");
  Form form = p.form();
  DiffOp r = a.in(form);
  DiffOp q(form, a.var());
  const int m = p.order();
  RationalFunction inv = p.leading().inverse();
  while (r.order() >= m) {
    int k = r.order() - m;
    std::vector<RationalFunction> t(static_cast<std::size_t>(k) + 1);
    t.back() = r.leading() * inv;
    DiffOp term(form, std::move(t), a.var());
    q += term;
    DiffOp next = r - term * p;
    if (next.order() >= r.order())
      fail(ErrorKind::kDomain, "left_divide: leading term did not cancel");
    r = std::move(next);
  }
  return {q, r};
}

Division right_divide(const DiffOp& a, const DiffOp& p) {
  // a* = q* p* + r*
  Division d = left_divide(a.adjoint(), p.adjoint());
  return {d.quotient.adjoint().in(p.form()), d.remainder.adjoint().in(p.form())};
}

DiffOp evaluate(const Poly& h, const DiffOp& op) {
  DiffOp acc(op.form(), op.var());
  for (int i = h.degree(); i >= 0; --i) {
    acc = acc * op;
    acc += DiffOp::scalar(RationalFunction(h.coeff(i)), op.form(), op.var());
  }
  return acc;
}

DiffOp power(const DiffOp& op, int e) {
  DiffOp r = DiffOp::identity(op.form(), op.var());
  for (int i = 0; i < e; ++i) r = r * op;
  return r;
}

Poly left_denominator(const DiffOp& a) {
  Poly l(1);
  for (const auto& c : a.coeffs())
    if (!c.is_zero()) l = lcm(l, c.den());
  return l;
}

std::pair<DiffOp, Poly> clear_to_laurent(const DiffOp& a) {
  Poly l(1);
  for (const auto& c : a.coeffs()) {
    if (c.is_zero()) continue;
    int v = c.den().valuation();
    l = lcm(l, c.den().shift_down(v));
  }
  return {RationalFunction(l) * a, l};
}

}  // namespace bispec
