#include "pcoinv/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace pcoinv {

QPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  QPoly p = QPoly::monomial(n) - QPoly(1);
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = exact_divide(p, cyclotomic_polynomial(d));
  }
  return p;
}

std::shared_ptr<const CyclotomicField> CyclotomicField::make(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::shared_ptr<const CyclotomicField> f(new CyclotomicField(n));
  cache.emplace(n, f);
  return f;
}

CyclotomicField::CyclotomicField(int n) : n_(n), phi_(cyclotomic_polynomial(n)) {
  modulus_.assign(static_cast<std::size_t>(phi_.degree()) + 1, Rational(0));
  for (const auto& [e, c] : phi_.terms()) modulus_[static_cast<std::size_t>(e)] = c;
}

CycloElem CyclotomicField::zero() const {
  return CycloElem(shared_from_this(), std::vector<Rational>(static_cast<std::size_t>(degree())));
}

CycloElem CyclotomicField::one() const { return from_rational(1); }

CycloElem CyclotomicField::from_rational(const Rational& c) const {
  std::vector<Rational> v(static_cast<std::size_t>(degree()));
  v[0] = c;
  return CycloElem(shared_from_this(), std::move(v));
}

CycloElem CyclotomicField::root_power(long k) const {
  long e = k % n_;
  if (e < 0) e += n_;
  std::vector<Rational> wide(static_cast<std::size_t>(std::max<long>(e + 1, degree())));
  wide[static_cast<std::size_t>(e)] = 1;
  return CycloElem(shared_from_this(), std::move(wide));
}

CycloElem::CycloElem(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
  reduce(std::move(coeffs));
}

void CycloElem::reduce(std::vector<Rational> wide) {
  const auto d = static_cast<std::size_t>(field_->degree());
  const auto& m = field_->modulus();
  for (std::size_t top = wide.size(); top-- > d;) {
    if (wide[top] == 0) continue;
    const Rational c = wide[top];
    // x^top = x^{top-d} * x^d and x^d = -sum_{i<d} m_i x^i
    for (std::size_t i = 0; i < d; ++i) {
      if (m[i] != 0) wide[top - d + i] -= c * m[i];
    }
    wide[top] = 0;
  }
  wide.resize(d);
  c_ = std::move(wide);
}

bool CycloElem::is_zero() const {
  for (const auto& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

bool CycloElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  if (!field_) return *this = o;
  if (!o.field_) return *this;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  if (!field_) return *this = -o;
  if (!o.field_) return *this;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
  if (!field_ || !o.field_) {
    c_.clear();
    if (!field_) field_ = o.field_;
    if (field_) c_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
    return *this;
  }
  const std::size_t d = c_.size();
  std::vector<Rational> wide(d == 0 ? 0 : 2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (o.c_[j] != 0) wide[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce(std::move(wide));
  return *this;
}

CycloElem CycloElem::operator-() const {
  CycloElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

bool CycloElem::operator==(const CycloElem& o) const {
  if (!field_ || !o.field_) return is_zero() && o.is_zero();
  return field_->order() == o.field_->order() && c_ == o.c_;
}

CycloElem CycloElem::inverse() const {
  if (!field_ || is_zero()) throw std::domain_error("inverse of zero in cyclotomic field");
  // Invariant: s * a == r (mod Phi_n).
  QPoly a;
  for (std::size_t i = 0; i < c_.size(); ++i) a.add_term(static_cast<int>(i), c_[i]);
  QPoly r0 = field_->phi(), r1 = a;
  QPoly s0 = 0, s1 = 1;
  while (!(r1.is_zero())) {
    QPoly quot;
    QPoly rem = r0;
    const int dd = r1.degree();
    const Rational lead = r1.coeff(dd);
    while (!rem.is_zero() && rem.degree() >= dd) {
      const int shift = rem.degree() - dd;
      const Rational c = rem.coeff(rem.degree()) / lead;
      quot.add_term(shift, c);
      rem -= QPoly::monomial(shift, c) * r1;
    }
    QPoly s2 = s0 - quot * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_n is irreducible.
  if (r0.degree() != 0) throw std::logic_error("cyclotomic modulus is not coprime to element");
  const Rational g = r0.coeff(0);
  std::vector<Rational> wide(static_cast<std::size_t>(std::max(s0.degree() + 1, field_->degree())));
  for (const auto& [e, c] : s0.terms()) wide[static_cast<std::size_t>(e)] = c / g;
  return CycloElem(field_, std::move(wide));
}

CycloElem CycloElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloElem result = field_->one();
  CycloElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string CycloElem::to_string(const std::string& var) const {
  QPoly p;
  for (std::size_t i = 0; i < c_.size(); ++i) p.add_term(static_cast<int>(i), c_[i]);
  return p.to_string(var);
}

int multiplicative_order(const CycloElem& x, int bound) {
  CycloElem p = x;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p *= x;
  }
  return 0;
}

}  // namespace pcoinv
