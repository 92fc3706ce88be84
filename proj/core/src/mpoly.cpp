#include "pcoinv/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcoinv {

int PolyRing::max_degree() const { return degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end()); }

int PolyRing::index(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> degrees) {
  if (names.size() != degrees.size()) throw std::invalid_argument("names and degrees differ in length");
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("variable degrees must be positive");
  }
  return std::make_shared<const PolyRing>(PolyRing{std::move(names), std::move(degrees)});
}

int weighted_degree(const PolyRing& ring, const Exponent& e) {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * ring.degrees[i];
  return d;
}

namespace {

void monomials_rec(const PolyRing& ring, std::size_t var, int remaining, Exponent& cur, std::vector<Exponent>& out) {
  if (var == ring.degrees.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  // Larger exponents on earlier variables first gives descending order.
  for (int a = remaining / ring.degrees[var]; a >= 0; --a) {
    cur[var] = a;
    monomials_rec(ring, var + 1, remaining - a * ring.degrees[var], cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Exponent> monomials_of_degree(const PolyRing& ring, int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  Exponent cur(ring.degrees.size(), 0);
  monomials_rec(ring, 0, d, cur, out);
  return out;
}

std::string monomial_to_string(const PolyRing& ring, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

MPoly MPoly::constant(RingPtr ring, const Rational& c) {
  MPoly p(ring);
  p.add_term(Exponent(static_cast<std::size_t>(ring->nvars()), 0), c);
  return p;
}

MPoly MPoly::variable(RingPtr ring, int i) {
  Exponent e(static_cast<std::size_t>(ring->nvars()), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  return monomial(std::move(ring), e);
}

MPoly MPoly::monomial(RingPtr ring, const Exponent& e, const Rational& c) {
  MPoly p(std::move(ring));
  p.add_term(e, c);
  return p;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (!ring_) throw std::logic_error("polynomial without a ring");
  if (static_cast<int>(e.size()) != ring_->nvars()) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  const Key k{weighted_degree(*ring_, e), e};
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MPoly::coeff(const Exponent& e) const {
  if (!ring_) return 0;
  auto it = terms_.find(Key{weighted_degree(*ring_, e), e});
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.first; }

bool MPoly::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.first == terms_.rbegin()->first.first;
}

MPoly MPoly::homogeneous_part(int d) const {
  MPoly out(ring_);
  for (const auto& [k, c] : terms_) {
    if (k.first == d) out.terms_.emplace(k, c);
  }
  return out;
}

const Rational& MPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of zero");
  return terms_.rbegin()->second;
}

const RingPtr& MPoly::require_ring(const MPoly& o) const {
  if (ring_ && o.ring_ && ring_ != o.ring_ && ring_->names != o.ring_->names) {
    throw std::invalid_argument("polynomials from different rings");
  }
  return ring_ ? ring_ : o.ring_;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  ring_ = require_ring(o);
  for (const auto& [k, c] : o.terms_) add_term(k.second, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  ring_ = require_ring(o);
  for (const auto& [k, c] : o.terms_) add_term(k.second, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out(a.require_ring(b));
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      Exponent e = ka.second;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += kb.second[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly MPoly::operator*(const Rational& c) const {
  MPoly out(ring_);
  if (c == 0) return out;
  for (const auto& [k, x] : terms_) out.terms_.emplace(k, x * c);
  return out;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  MPoly r = constant(ring_, 1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

MPoly MPoly::substitute(int var, const MPoly& value) const {
  MPoly out(ring_);
  const auto v = static_cast<std::size_t>(var);
  std::map<int, MPoly> powers;
  for (const auto& [k, c] : terms_) {
    Exponent rest = k.second;
    const int a = rest[v];
    rest[v] = 0;
    if (a == 0) {
      out.add_term(rest, c);
      continue;
    }
    auto it = powers.find(a);
    if (it == powers.end()) it = powers.emplace(a, value.pow(a)).first;
    out += monomial(ring_, rest, c) * it->second;
  }
  return out;
}

bool MPoly::uses(int var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const auto& kv) { return kv.first.second[static_cast<std::size_t>(var)] != 0; });
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    const std::string mono = monomial_to_string(*ring_, it->first.second);
    if (first) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    const Rational ac = abs(c);
    if (mono == "1") s += pcoinv::to_string(ac);
    else if (ac == 1) s += mono;
    else s += pcoinv::to_string(ac) + "*" + mono;
    first = false;
  }
  return s;
}

}  // namespace pcoinv
