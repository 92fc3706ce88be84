#include "pcoinv/rational.hpp"

#include <stdexcept>

namespace pcoinv {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational x;
  if (x.set_str(text, 10) != 0 || x.get_den() == 0) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  x.canonicalize();
  return x;
}

bool is_integral(const Rational& x) { return x.get_den() == 1; }

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

}  // namespace pcoinv
