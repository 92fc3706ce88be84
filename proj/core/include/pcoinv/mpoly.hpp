#pragma once

// Sparse multivariate polynomials over Q with positive integer variable weights.
// Term order: weighted degree, then lexicographic with earlier variables larger.

#include <memory>
#include <string>
#include <utility>
#include <map>
#include <vector>

#include "pcoinv/rational.hpp"

namespace pcoinv {

struct PolyRing {
  std::vector<std::string> names;
  std::vector<int> degrees;

  int nvars() const { return static_cast<int>(names.size()); }
  int max_degree() const;
  int index(const std::string& name) const;  // -1 when absent
};

using RingPtr = std::shared_ptr<const PolyRing>;
using Exponent = std::vector<int>;

RingPtr make_ring(std::vector<std::string> names, std::vector<int> degrees);

int weighted_degree(const PolyRing& ring, const Exponent& e);
/// All exponents of weighted degree d, in descending term order.
std::vector<Exponent> monomials_of_degree(const PolyRing& ring, int d);
std::string monomial_to_string(const PolyRing& ring, const Exponent& e);

class MPoly {
 public:
  /// (weighted degree, exponent); std::map order is the ascending term order.
  using Key = std::pair<int, Exponent>;

  MPoly() = default;
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}
  static MPoly constant(RingPtr ring, const Rational& c);
  static MPoly variable(RingPtr ring, int i);
  static MPoly monomial(RingPtr ring, const Exponent& e, const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exponent& e, const Rational& c);
  Rational coeff(const Exponent& e) const;

  /// Largest weighted degree, -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  MPoly homogeneous_part(int d) const;
  /// Leading coefficient in the term order; requires nonzero.
  const Rational& leading_coeff() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator*(const Rational& c) const;
  MPoly operator-() const { return *this * Rational(-1); }
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  MPoly pow(int e) const;

  /// Replaces variable `var` by `value`.
  MPoly substitute(int var, const MPoly& value) const;
  /// True when variable `var` occurs.
  bool uses(int var) const;

  /// Descending terms, e.g. `u1^3 - 2*u1*u2`.
  std::string to_string() const;

 private:
  const RingPtr& require_ring(const MPoly& o) const;
  RingPtr ring_;
  std::map<Key, Rational> terms_;
};

}  // namespace pcoinv
