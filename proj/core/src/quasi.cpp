#include "bispec/quasi.hpp"

#include <algorithm>
#include <sstream>

#include "bispec/error.hpp"

namespace bispec {

namespace {

void require_laurent(const RationalFunction& f) {
  if (!f.is_laurent())
    fail(ErrorKind::kUnsupportedInput,
         "coefficient with a pole away from 0: " + f.str());
}

}  // namespace

// ---------------------------------------------------------------------------
// QuasiPolynomial

QuasiPolynomial QuasiPolynomial::monomial(const Rational& c, const Rational& gamma,
                                          int log_power) {
  QuasiPolynomial q;
  q.add_term(c, gamma, log_power);
  return q;
}

bool QuasiPolynomial::is_log_free() const { return max_log_power() <= 0; }

int QuasiPolynomial::max_log_power() const {
  int m = -1;
  for (const auto& [k, v] : terms_) m = std::max(m, k.second);
  return m;
}

Rational QuasiPolynomial::coeff(const Rational& gamma, int log_power) const {
  auto it = terms_.find({gamma, log_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

void QuasiPolynomial::add_term(const Rational& c, const Rational& gamma,
                               int log_power) {
  if (c.is_zero()) return;
  if (log_power < 0) fail(ErrorKind::kUsage, "negative log power");
  auto [it, inserted] = terms_.try_emplace({gamma, log_power}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QuasiPolynomial QuasiPolynomial::euler() const {
  QuasiPolynomial r;
  for (const auto& [k, v] : terms_) {
    r.add_term(v * k.first, k.first, k.second);
    if (k.second > 0) r.add_term(v * Rational(k.second), k.first, k.second - 1);
  }
  return r;
}

QuasiPolynomial QuasiPolynomial::log_derivative() const {
  QuasiPolynomial r;
  for (const auto& [k, v] : terms_)
    if (k.second > 0) r.add_term(v * Rational(k.second), k.first, k.second - 1);
  return r;
}

QuasiPolynomial QuasiPolynomial::times_power(int shift) const {
  QuasiPolynomial r;
  for (const auto& [k, v] : terms_)
    r.terms_.emplace(Key{k.first + Rational(shift), k.second}, v);
  return r;
}

QuasiPolynomial QuasiPolynomial::times(const RationalFunction& laurent) const {
  require_laurent(laurent);
  const int m = laurent.laurent_shift();
  QuasiPolynomial r;
  const auto& c = laurent.num().coeffs();
  for (std::size_t s = 0; s < c.size(); ++s) {
    if (c[s].is_zero()) continue;
    for (const auto& [k, v] : terms_)
      r.add_term(v * c[s], k.first + Rational(static_cast<long>(s) - m), k.second);
  }
  return r;
}

QuasiPolynomial QuasiPolynomial::operator-() const {
  QuasiPolynomial r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

QuasiPolynomial& QuasiPolynomial::operator+=(const QuasiPolynomial& o) {
  for (const auto& [k, v] : o.terms_) add_term(v, k.first, k.second);
  return *this;
}

QuasiPolynomial& QuasiPolynomial::operator-=(const QuasiPolynomial& o) {
  for (const auto& [k, v] : o.terms_) add_term(-v, k.first, k.second);
  return *this;
}

QuasiPolynomial operator*(const Rational& s, const QuasiPolynomial& q) {
  QuasiPolynomial r;
  for (const auto& [k, v] : q.terms_) r.add_term(s * v, k.first, k.second);
  return r;
}

std::string QuasiPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v << ")*x^(" << k.first << ")";
    if (k.second == 1) os << "*ln(x)";
    if (k.second > 1) os << "*ln(x)^" << k.second;
  }
  return os.str();
}

QuasiPolynomial apply(const DiffOp& a, const QuasiPolynomial& q) {
  DiffOp e = a.in(Form::kEuler);
  for (const auto& c : e.coeffs())
    if (!c.is_zero()) require_laurent(c);
  QuasiPolynomial acc, pw = q;
  for (int k = 0; k <= e.order(); ++k) {
    if (k > 0) pw = pw.euler();
    const auto& c = e.coeffs()[static_cast<std::size_t>(k)];
    if (!c.is_zero()) acc += pw.times(c);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// WaveSeries

WaveSeries::WaveSeries(Window window, std::map<Key, Rational> coeffs)
    : window_(window), c_(std::move(coeffs)) {
  prune();
}

WaveSeries WaveSeries::diagonal(const std::vector<Rational>& coeffs) {
  if (coeffs.empty()) fail(ErrorKind::kUsage, "diagonal series needs a_0");
  const int depth = static_cast<int>(coeffs.size()) - 1;
  std::map<Key, Rational> c;
  for (int k = 0; k <= depth; ++k)
    if (!coeffs[static_cast<std::size_t>(k)].is_zero())
      c.emplace(Key{-k, -k}, coeffs[static_cast<std::size_t>(k)]);
  return WaveSeries(Window{-depth, 0, -depth, 0}, std::move(c));
}

void WaveSeries::prune() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second.is_zero() || !window_.contains(it->first.first, it->first.second))
      it = c_.erase(it);
    else
      ++it;
  }
}

Rational WaveSeries::coeff(int i, int j) const {
  if (!window_.contains(i, j))
    fail(ErrorKind::kTruncationInsufficient,
         "coefficient (" + std::to_string(i) + "," + std::to_string(j) +
             ") outside the guaranteed window");
  auto it = c_.find({i, j});
  return it == c_.end() ? Rational(0) : it->second;
}

WaveSeries WaveSeries::step(char var) const {
  // d_x (e^{xz} S) = e^{xz} (z + d_x) S, symmetrically in z.
  std::map<Key, Rational> out;
  auto add = [&out](Key k, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, ins] = out.try_emplace(k, v);
    if (!ins) it->second += v;
  };
  Window w = window_;
  if (var == 'x') {
    for (const auto& [k, v] : c_) {
      add({k.first, k.second + 1}, v);
      add({k.first - 1, k.second}, v * Rational(k.first));
    }
    ++w.min_z;
    ++w.max_z;
  } else {
    for (const auto& [k, v] : c_) {
      add({k.first + 1, k.second}, v);
      add({k.first, k.second - 1}, v * Rational(k.second));
    }
    ++w.min_x;
    ++w.max_x;
  }
  return WaveSeries(w, std::move(out));
}

WaveSeries WaveSeries::times(const RationalFunction& laurent, char var) const {
  require_laurent(laurent);
  if (laurent.is_zero()) return WaveSeries(window_, {});
  const int m = laurent.laurent_shift();
  const auto& c = laurent.num().coeffs();
  const int hi = laurent.num().degree() - m;
  Window w = window_;
  if (var == 'x') {
    w.min_x += hi;
    w.max_x += hi;
  } else {
    w.min_z += hi;
    w.max_z += hi;
  }
  std::map<Key, Rational> out;
  for (std::size_t s = 0; s < c.size(); ++s) {
    if (c[s].is_zero()) continue;
    const int t = static_cast<int>(s) - m;
    for (const auto& [k, v] : c_) {
      Key key = var == 'x' ? Key{k.first + t, k.second} : Key{k.first, k.second + t};
      if (!w.contains(key.first, key.second)) continue;
      auto [it, ins] = out.try_emplace(key, v * c[s]);
      if (!ins) it->second += v * c[s];
    }
  }
  return WaveSeries(w, std::move(out));
}

WaveSeries WaveSeries::apply(const DiffOp& a) const {
  DiffOp d = a.in(Form::kDel);
  const char var = a.var();
  std::optional<WaveSeries> acc;
  WaveSeries pw = *this;
  for (int k = 0; k <= d.order(); ++k) {
    if (k > 0) pw = pw.step(var);
    const auto& c = d.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    WaveSeries term = pw.times(c, var);
    acc = acc ? *acc + term : term;
  }
  if (!acc) return WaveSeries(window_, {});
  if (acc->window().empty())
    fail(ErrorKind::kTruncationInsufficient,
         "series window exhausted; expand to a larger depth");
  return *acc;
}

WaveSeries operator+(const WaveSeries& a, const WaveSeries& b) {
  Window w{std::max(a.window_.min_x, b.window_.min_x),
           std::max(a.window_.max_x, b.window_.max_x),
           std::max(a.window_.min_z, b.window_.min_z),
           std::max(a.window_.max_z, b.window_.max_z)};
  std::map<WaveSeries::Key, Rational> out;
  for (const auto* s : {&a, &b})
    for (const auto& [k, v] : s->c_) {
      if (!w.contains(k.first, k.second)) continue;
      auto [it, ins] = out.try_emplace(k, v);
      if (!ins) it->second += v;
    }
  return WaveSeries(w, std::move(out));
}

WaveSeries WaveSeries::operator-() const {
  WaveSeries r = *this;
  for (auto& [k, v] : r.c_) v = -v;
  return r;
}

WaveSeries operator-(const WaveSeries& a, const WaveSeries& b) { return a + (-b); }

std::optional<std::pair<WaveSeries::Key, Rational>> WaveSeries::first_nonzero() const {
  std::optional<std::pair<Key, Rational>> best;
  for (const auto& [k, v] : c_) {
    if (!best || k.first + k.second > best->first.first + best->first.second)
      best = std::make_pair(k, v);
  }
  return best;
}

WaveSeries WaveSeries::restrict_to(const Window& inner) const {
  if (inner.min_x < window_.min_x || inner.min_z < window_.min_z)
    fail(ErrorKind::kTruncationInsufficient, "requested window exceeds the exact window");
  return WaveSeries(inner, c_);
}

// ---------------------------------------------------------------------------
// ExpSeries

ExpSeries::ExpSeries(CyclotomicScalar rate, int valid_min, int max_degree,
                     std::map<int, CyclotomicScalar> coeffs)
    : rate_(std::move(rate)), valid_min_(valid_min), max_(max_degree),
      s_(std::move(coeffs)) {
  prune();
}

void ExpSeries::prune() {
  for (auto it = s_.begin(); it != s_.end();) {
    if (it->second.is_zero() || it->first < valid_min_ || it->first > max_)
      it = s_.erase(it);
    else
      ++it;
  }
}

CyclotomicScalar ExpSeries::coeff(int e) const {
  if (e < valid_min_)
    fail(ErrorKind::kTruncationInsufficient,
         "jet coefficient x^" + std::to_string(e) + " below the exact window");
  auto it = s_.find(e);
  return it == s_.end() ? rate_.field()->zero() : it->second;
}

ExpSeries ExpSeries::euler_step() const {
  std::map<int, CyclotomicScalar> out;
  auto add = [&out](int e, const CyclotomicScalar& v) {
    if (v.is_zero()) return;
    auto it = out.find(e);
    if (it == out.end()) out.emplace(e, v);
    else it->second = it->second + v;
  };
  for (const auto& [e, v] : s_) {
    add(e + 1, rate_ * v);
    if (e != 0) add(e, v * Rational(e));
  }
  return ExpSeries(rate_, valid_min_ + 1, max_ + 1, std::move(out));
}

ExpSeries ExpSeries::times(const RationalFunction& laurent) const {
  require_laurent(laurent);
  if (laurent.is_zero()) return ExpSeries(rate_, valid_min_, max_, {});
  const int m = laurent.laurent_shift();
  const int hi = laurent.num().degree() - m;
  const auto& c = laurent.num().coeffs();
  std::map<int, CyclotomicScalar> out;
  for (std::size_t s = 0; s < c.size(); ++s) {
    if (c[s].is_zero()) continue;
    const int t = static_cast<int>(s) - m;
    for (const auto& [e, v] : s_) {
      auto it = out.find(e + t);
      if (it == out.end()) out.emplace(e + t, v * c[s]);
      else it->second = it->second + v * c[s];
    }
  }
  return ExpSeries(rate_, valid_min_ + hi, max_ + hi, std::move(out));
}

ExpSeries ExpSeries::scaled(const Rational& s) const {
  std::map<int, CyclotomicScalar> out;
  for (const auto& [e, v] : s_) out.emplace(e, v * s);
  return ExpSeries(rate_, valid_min_, max_, std::move(out));
}

ExpSeries ExpSeries::apply(const DiffOp& a) const {
  DiffOp d = a.in(Form::kEuler);
  std::optional<ExpSeries> acc;
  ExpSeries pw = *this;
  for (int k = 0; k <= d.order(); ++k) {
    if (k > 0) pw = pw.euler_step();
    const auto& c = d.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    ExpSeries term = pw.times(c);
    acc = acc ? *acc + term : term;
  }
  if (!acc) return ExpSeries(rate_, valid_min_, max_, {});
  return *acc;
}

ExpSeries operator+(const ExpSeries& a, const ExpSeries& b) {
  if (!(a.rate_ == b.rate_))
    fail(ErrorKind::kUsage, "adding exponential series with different rates");
  std::map<int, CyclotomicScalar> out;
  int lo = std::max(a.valid_min_, b.valid_min_);
  int hi = std::max(a.max_, b.max_);
  for (const auto* s : {&a, &b})
    for (const auto& [e, v] : s->s_) {
      if (e < lo) continue;
      auto it = out.find(e);
      if (it == out.end()) out.emplace(e, v);
      else it->second = it->second + v;
    }
  return ExpSeries(a.rate_, lo, hi, std::move(out));
}

}  // namespace bispec
