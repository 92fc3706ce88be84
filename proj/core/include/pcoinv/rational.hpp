#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pcoinv {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);
std::string to_string(const Rational& x);

/// Parses "a" or "a/b"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

bool is_integral(const Rational& x);

Integer factorial(int n);
Integer binomial(int n, int k);

}  // namespace pcoinv
