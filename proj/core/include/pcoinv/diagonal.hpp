#pragma once

// Ideal membership in Q[a_1..a_n, b_1..b_n] for the ideal generated by the
// positive-degree diagonal invariants, one bidegree at a time.

#include <optional>
#include <string>
#include <vector>

#include "pcoinv/mpoly.hpp"

namespace pcoinv {

/// Ring with variables a1..an, b1..bn, all of degree 1.
RingPtr diagonal_ring(int n);

/// (a-degree, b-degree) of an exponent vector over diagonal_ring(n).
std::pair<int, int> bidegree(int n, const Exponent& e);

struct DiagonalGenerator {
  int r = 0;  // a-degree
  int s = 0;  // b-degree
  MPoly poly; // sum_i a_i^r b_i^s
};

/// Polarized power sums p_{r,s} with 1 <= r + s <= n.
std::vector<DiagonalGenerator> diagonal_invariant_generators(int n);

struct CertificateTerm {
  int generator = 0;  // index into diagonal_invariant_generators(n)
  Exponent multiplier;
  Rational coeff;
};

struct MembershipResult {
  bool member = false;
  std::vector<CertificateTerm> certificate;
  bool certificate_verified = false;  // re-expansion reproduces the target
};

/// Target must be bihomogeneous.
MembershipResult membership(const MPoly& target, int n);

/// prod_{i in I} a_i prod_{j not in I} b_j for the subset mask I.
MPoly phi_product(int n, unsigned mask);

struct PhiTrivialReport {
  int n = 0;
  bool all_zero = false;
  int subsets = 0;
  std::vector<std::string> failures;
  bool control_ok = false;  // a1 is not in the ideal when n >= 2
};

PhiTrivialReport phi_trivial_check(int n);

}  // namespace pcoinv
