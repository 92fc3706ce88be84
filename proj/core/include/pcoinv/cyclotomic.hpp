#pragma once

// Q(eta) for a primitive n-th root of unity eta, realised as Q[x]/Phi_n.

#include <memory>
#include <string>
#include <vector>

#include "pcoinv/bipoly.hpp"

namespace pcoinv {

/// Phi_n, computed by dividing x^n - 1 by Phi_d for every proper divisor d.
QPoly cyclotomic_polynomial(int n);

class CycloElem;

class CyclotomicField : public std::enable_shared_from_this<CyclotomicField> {
 public:
  static std::shared_ptr<const CyclotomicField> make(int n);

  int order() const { return n_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  /// Coefficients of Phi_n, low to high; monic.
  const std::vector<Rational>& modulus() const { return modulus_; }
  const QPoly& phi() const { return phi_; }

  CycloElem zero() const;
  CycloElem one() const;
  CycloElem from_rational(const Rational& c) const;
  /// eta^k for any integer k.
  CycloElem root_power(long k) const;

 private:
  explicit CyclotomicField(int n);
  int n_;
  QPoly phi_;
  std::vector<Rational> modulus_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Element of Q(eta); the representative has degree < deg Phi_n.
class CycloElem {
 public:
  CycloElem() = default;  // detached zero; usable only as an assignment target
  CycloElem(FieldPtr field, std::vector<Rational> coeffs);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);
  CycloElem& operator/=(const CycloElem& o) { return *this *= o.inverse(); }
  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  friend CycloElem operator/(CycloElem a, const CycloElem& b) { return a /= b; }
  CycloElem operator-() const;
  bool operator==(const CycloElem& o) const;
  bool operator!=(const CycloElem& o) const { return !(*this == o); }

  /// Multiplicative inverse via the extended Euclidean algorithm in Q[x].
  CycloElem inverse() const;
  CycloElem pow(long e) const;

  std::string to_string(const std::string& var = "eta") const;

 private:
  void reduce(std::vector<Rational> wide);
  FieldPtr field_;
  std::vector<Rational> c_;
};

/// Order of eta^k in the multiplicative group.
int multiplicative_order(const CycloElem& x, int bound);

}  // namespace pcoinv
