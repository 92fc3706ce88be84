#include "pcoinv/bipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcoinv {

namespace {

std::string power(const std::string& var, int e) {
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

// Renders a signed term `c*mono`; an empty mono stands for the unit.
std::string render_term(const Rational& c, const std::string& mono) {
  if (mono.empty()) return to_string(c);
  if (c == 1) return mono;
  if (c == -1) return "-" + mono;
  return to_string(c) + "*" + mono;
}

void append_term(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (term.front() == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

}  // namespace

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

QPoly QPoly::monomial(int exponent, const Rational& c) {
  QPoly p;
  p.add_term(exponent, c);
  return p;
}

QPoly QPoly::from_coeffs(const std::vector<long>& coeffs) {
  QPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(static_cast<int>(i), coeffs[i]);
  return p;
}

Rational QPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int QPoly::min_degree() const {
  if (terms_.empty()) throw std::logic_error("min_degree of zero polynomial");
  return terms_.begin()->first;
}

int QPoly::degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
  return terms_.rbegin()->first;
}

void QPoly::add_term(int exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly QPoly::operator-() const {
  QPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

QPoly QPoly::substitute_power(int k) const {
  QPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e * k, c);
  return r;
}

Rational QPoly::evaluate(const Rational& x) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational p = 1;
    Rational base = e >= 0 ? x : Rational(1) / x;
    for (int i = 0; i < std::abs(e); ++i) p *= base;
    s += c * p;
  }
  return s;
}

Rational QPoly::at_one() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool QPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return pcoinv::is_integral(kv.second); });
}

bool QPoly::has_nonneg_integer_coeffs() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) {
    return pcoinv::is_integral(kv.second) && kv.second > 0;
  });
}

bool QPoly::is_palindromic() const {
  if (terms_.empty()) return true;
  const int shift = min_degree() + degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& kv) { return coeff(shift - kv.first) == kv.second; });
}

std::string QPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) append_term(out, render_term(c, e == 0 ? "" : power(var, e)));
  return out;
}

QPoly exact_divide(const QPoly& numerator, const QPoly& denominator) {
  if (denominator.is_zero()) throw std::domain_error("division by zero polynomial");
  if (numerator.is_zero()) return {};
  if (numerator.min_degree() < 0 || denominator.min_degree() < 0) {
    throw std::domain_error("exact_divide expects ordinary polynomials");
  }
  QPoly rem = numerator;
  QPoly quot;
  const int dd = denominator.degree();
  const Rational lead = denominator.coeff(dd);
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    const Rational c = rem.coeff(rem.degree()) / lead;
    quot.add_term(shift, c);
    rem -= QPoly::monomial(shift, c) * denominator;
  }
  if (!rem.is_zero()) throw std::domain_error("polynomial division is not exact");
  return quot;
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Key{0, 0}, c);
}

BiPoly BiPoly::monomial(int t_exp, int q_exp, const Rational& c) {
  BiPoly p;
  p.add_term(t_exp, q_exp, c);
  return p;
}

BiPoly BiPoly::from_q(const QPoly& p, int t_exp) {
  BiPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(t_exp, e, c);
  return r;
}

Rational BiPoly::coeff(int t_exp, int q_exp) const {
  auto it = terms_.find(Key{t_exp, q_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(int t_exp, int q_exp, const Rational& c) {
  if (t_exp < 0 || q_exp < 0) throw std::domain_error("BiPoly exponents must be nonnegative");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Key{t_exp, q_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int BiPoly::t_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.first; }

int BiPoly::q_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

QPoly BiPoly::t_coeff(int i) const {
  QPoly r;
  for (auto it = terms_.lower_bound(Key{i, 0}); it != terms_.end() && it->first.first == i; ++it) {
    r.add_term(it->first.second, it->second);
  }
  return r;
}

QPoly BiPoly::at_t_one() const {
  QPoly r;
  for (const auto& [k, c] : terms_) r.add_term(k.second, c);
  return r;
}

QPoly BiPoly::at_q_one() const {
  QPoly r;
  for (const auto& [k, c] : terms_) r.add_term(k.first, c);
  return r;
}

Rational BiPoly::at_one() const {
  Rational s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

bool BiPoly::is_palindromic() const {
  if (terms_.empty()) return true;
  const int a = t_degree();
  const int b = q_degree();
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) {
    const auto [i, j] = kv.first;
    return i <= a && j <= b && coeff(a - i, b - j) == kv.second;
  });
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string mono;
    if (k.first > 0) mono = power("t", k.first);
    if (k.second > 0) mono += (mono.empty() ? "" : "*") + power("q", k.second);
    append_term(out, render_term(c, mono));
  }
  return out;
}

BiPoly bipoly_arith(const BiPoly& a, const BiPoly& b, BiOp op) {
  switch (op) {
    case BiOp::add: return a + b;
    case BiOp::sub: return a - b;
    case BiOp::mul: return a * b;
  }
  throw std::invalid_argument("unknown BiOp");
}

// ---------------------------------------------------------------- BiSeries

BiSeries::BiSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

BiSeries BiSeries::from_bipoly(const BiPoly& p, int order) {
  BiSeries s(order);
  for (const auto& [k, c] : p.terms()) {
    if (k.first <= order) s.coeff(k.first).add_term(k.second, c);
  }
  return s;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  BiSeries r(std::min(a.order_, b.order_));
  for (int i = 0; i <= r.order_; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= r.order_; ++j) r.coeff(i + j) += a.coeff(i) * b.coeff(j);
  }
  return r;
}

BiSeries BiSeries::operator*(const BiPoly& p) const { return *this * from_bipoly(p, order_); }

bool BiSeries::operator==(const BiSeries& o) const {
  const int m = std::min(order_, o.order_);
  for (int i = 0; i <= m; ++i) {
    if (!(coeff(i) == o.coeff(i))) return false;
  }
  return true;
}

BiPoly BiSeries::to_bipoly() const {
  BiPoly p;
  for (int i = 0; i <= order_; ++i) p += BiPoly::from_q(coeff(i), i);
  return p;
}

BiSeries inv_product_series(const std::vector<int>& q_exponents, int order) {
  BiSeries s(order);
  s.coeff(0) = QPoly(1);
  for (int e : q_exponents) {
    // multiply by sum_j t^j q^{je}: coefficient recurrence c'_r = c_r + q^e c'_{r-1}
    for (int r = 1; r <= order; ++r) s.coeff(r) += QPoly::monomial(e) * s.coeff(r - 1);
  }
  return s;
}

BiPoly product_one_minus_tq(const std::vector<int>& q_exponents) {
  BiPoly p(1);
  for (int e : q_exponents) p *= BiPoly(1) - BiPoly::monomial(1, e);
  return p;
}

std::vector<int> range_exponents(int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

}  // namespace pcoinv
