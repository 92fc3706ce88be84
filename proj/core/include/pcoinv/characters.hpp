#pragma once

// Symmetric group characters, plethystic principal specialization and the
// bigraded Frobenius characters of P_n and of P_(m^k) under S_k.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pcoinv/bipoly.hpp"
#include "pcoinv/combinat.hpp"

namespace pcoinv {

/// Character value chi^lambda(mu) by the Murnaghan-Nakayama rule.
Integer mn_character(const Partition& lambda, const Partition& mu);

struct CharacterTable {
  int n = 0;
  std::vector<Partition> partitions;      // row and column order: enumerate_partitions(n)
  std::vector<std::vector<Integer>> chi;  // chi[lambda][mu]
  std::vector<Integer> z;                 // centralizer orders
  std::vector<Integer> class_size;        // n! / z

  int index(const Partition& p) const;
  const Integer& value(const Partition& lambda, const Partition& mu) const;
  /// True when the rows are orthonormal under the class-size inner product.
  bool is_orthogonal() const;
};

CharacterTable character_table(int n);

/// s_lambda at the alphabet with f_j copies of q^j: sum_nu chi(nu)/z_nu prod_i f(q^{nu_i}).
QPoly principal_spec(const Partition& lambda, const QPoly& f);

enum class SymBasis { schur, complete, monomial, powersum };
const char* to_string(SymBasis b);

/// Finite sum of basis functions indexed by partitions of n with BiPoly coefficients.
struct SymFunc {
  SymBasis basis = SymBasis::schur;
  int n = 0;
  std::map<Partition, BiPoly, std::greater<Partition>> coeffs;  // (n), (n-1,1), ..., (1^n)

  void add(const Partition& lambda, const BiPoly& c);
  BiPoly coeff(const Partition& lambda) const;
  bool operator==(const SymFunc& o) const { return basis == o.basis && n == o.n && coeffs == o.coeffs; }
  /// Applies f to every coefficient and drops zeros.
  SymFunc map(const std::function<BiPoly(const BiPoly&)>& f) const;
  /// Text form `s[2] + t*q*s[1,1]`.
  std::string to_string() const;
};

enum class CharMethod { syt, koszul, trace };

struct CharResult {
  SymFunc value;
  bool ok = true;       // internal consistency (integrality, vanishing of the truncated tail)
  std::string message;
};

CharResult char_P(int n, CharMethod method);

enum class ResidualMethod { plethysm, trace };
CharResult residual_char(int k, int m, ResidualMethod method);

/// Dimension sum_lambda c_lambda(1,1) f^lambda.
Integer symfunc_dimension(const SymFunc& f);

struct InvariantCell {
  int r = 0;
  int e = 0;
  Integer invariant_dim;
  Integer monomial_count;
};

struct InvariantsReport {
  bool ok = true;
  std::vector<InvariantCell> cells;
};

/// Compares dim (T_n)^{S_n}_{r,e} with the number of monomials in e~_0..e~_n of bidegree (r, e).
InvariantsReport invariants_free_check(int n, int r_max);

/// Trace of a permutation of cycle type mu on (T_n)_r, graded by q: prod over cycles c of [r+1]_{q^|c|}.
QPoly ambient_trace_formula(const Partition& mu, int r);

}  // namespace pcoinv
