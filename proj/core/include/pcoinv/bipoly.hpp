#pragma once

// Exact univariate (Laurent) polynomials in q, bivariate polynomials in (t, q),
// and t-truncated power series with q-polynomial coefficients.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pcoinv/rational.hpp"

namespace pcoinv {

/// Laurent polynomial in one variable with rational coefficients.
/// Zero coefficients are never stored.
class QPoly {
 public:
  QPoly() = default;
  QPoly(const Rational& c);  // NOLINT: constants convert implicitly
  QPoly(long c) : QPoly(Rational(c)) {}  // NOLINT
  QPoly(int c) : QPoly(Rational(c)) {}   // NOLINT

  static QPoly monomial(int exponent, const Rational& c = 1);
  /// Dense constructor: coeffs[i] is the coefficient of q^i.
  static QPoly from_coeffs(const std::vector<long>& coeffs);

  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;  // requires nonzero
  int degree() const;      // requires nonzero

  void add_term(int exponent, const Rational& c);

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;
  bool operator==(const QPoly& o) const { return terms_ == o.terms_; }

  /// q -> q^k.
  QPoly substitute_power(int k) const;
  Rational evaluate(const Rational& x) const;
  /// Sum of coefficients (value at q = 1).
  Rational at_one() const;
  bool has_nonneg_integer_coeffs() const;
  bool is_integral() const;
  /// p(q) == q^shift * p(1/q)
  bool is_palindromic() const;

  std::string to_string(const std::string& var = "q") const;

 private:
  std::map<int, Rational> terms_;
};

/// Exact division; throws std::domain_error when the remainder is nonzero.
/// Both operands must be ordinary polynomials (no negative exponents).
QPoly exact_divide(const QPoly& numerator, const QPoly& denominator);

/// Polynomial in (t, q); keys are (t-exponent, q-exponent), nonnegative.
/// std::map keeps t-degree major, q-degree minor canonical order.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  BiPoly(const Rational& c);  // NOLINT
  BiPoly(long c) : BiPoly(Rational(c)) {}  // NOLINT
  BiPoly(int c) : BiPoly(Rational(c)) {}   // NOLINT

  static BiPoly monomial(int t_exp, int q_exp, const Rational& c = 1);
  static BiPoly t() { return monomial(1, 0); }
  static BiPoly q() { return monomial(0, 1); }
  /// Embeds a q-polynomial multiplied by t^t_exp.
  static BiPoly from_q(const QPoly& p, int t_exp = 0);

  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coeff(int t_exp, int q_exp) const;
  bool is_zero() const { return terms_.empty(); }
  void add_term(int t_exp, int q_exp, const Rational& c);

  int t_degree() const;  // -1 for zero
  int q_degree() const;  // -1 for zero
  /// Coefficient of t^i as a q-polynomial.
  QPoly t_coeff(int i) const;
  QPoly at_t_one() const;
  /// Value at q = 1, returned as a polynomial in t (printed with variable "t").
  QPoly at_q_one() const;
  Rational at_one() const;

  /// t^a q^b p(1/t, 1/q) == p, with (a, b) = (t_degree, top q-degree).
  bool is_palindromic() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  BiPoly operator-() const;
  bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

  /// Text form `1 + 2*t*q + 2*t*q^2 + t^2*q^3`.
  std::string to_string() const;

 private:
  std::map<Key, Rational> terms_;
};

enum class BiOp { add, sub, mul };
BiPoly bipoly_arith(const BiPoly& a, const BiPoly& b, BiOp op);

/// Power series in t truncated at t-degree R, with q-polynomial coefficients.
class BiSeries {
 public:
  explicit BiSeries(int order);
  static BiSeries from_bipoly(const BiPoly& p, int order);

  int order() const { return order_; }
  const QPoly& coeff(int r) const { return coeffs_.at(static_cast<std::size_t>(r)); }
  QPoly& coeff(int r) { return coeffs_.at(static_cast<std::size_t>(r)); }
  const std::vector<QPoly>& coeffs() const { return coeffs_; }

  /// Product truncated at the smaller order.
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  BiSeries operator*(const BiPoly& p) const;
  bool operator==(const BiSeries& o) const;
  BiPoly to_bipoly() const;

 private:
  int order_;
  std::vector<QPoly> coeffs_;
};

/// prod_j (1 - t q^{e_j})^{-1}, truncated at t-degree R.
BiSeries inv_product_series(const std::vector<int>& q_exponents, int order);

/// prod_j (1 - t q^{e_j}) as a polynomial.
BiPoly product_one_minus_tq(const std::vector<int>& q_exponents);

std::vector<int> range_exponents(int n);  // {0, 1, ..., n}

}  // namespace pcoinv
