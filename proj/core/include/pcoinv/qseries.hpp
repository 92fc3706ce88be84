#pragma once

// q-analogs, the (des, maj) generating functions A_alpha(t, q), MacMahon's
// identity and q-weighted lattice point counts in products of simplices.

#include <stdexcept>
#include <vector>

#include "pcoinv/bipoly.hpp"
#include "pcoinv/combinat.hpp"

namespace pcoinv {

QPoly q_integer(int n);                 // [n]_q
QPoly q_factorial(int n);               // [n]_q!
QPoly q_binomial(int n, int k);         // [n choose k]_q
QPoly q_multinomial(const Composition& alpha);

/// sum over w in W_alpha of t^des(w) q^maj(w).
BiPoly A_alpha(const Composition& alpha);
/// t^des(T) q^maj(T) summed over SYT(lambda).
BiPoly syt_generating_function(const Partition& lambda);

struct MacMahonReport {
  bool holds = false;
  BiSeries lhs{0};
  BiSeries rhs{0};
  int first_mismatch = -1;  // t-degree of the first disagreement
};

MacMahonReport macmahon_check(const Composition& alpha, int order);

inline constexpr long kDefaultEnumerationBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Delta_{alpha_1} x ... x Delta_{alpha_k} with an integer weight per coordinate.
struct PolytopeSpec {
  Composition dims;
  std::vector<int> weights;

  /// Weights (1..alpha_1, 1..alpha_2, ...).
  static PolytopeSpec product_of_simplices(const Composition& alpha);
  /// Validates dims and weight length; throws std::invalid_argument.
  void validate() const;
  /// Number of lattice points of the r-th dilate.
  Integer lattice_point_count(int r) const;
};

/// sum over lattice points v of r * Delta_alpha of q^(v . a), by enumeration.
/// Throws BudgetExceeded when the point count exceeds `budget`.
QPoly q_ehrhart(const PolytopeSpec& spec, int r, long budget = kDefaultEnumerationBudget);

enum class SegreMethod { lattice, closed_form };

/// Bigraded Hilbert series of T_alpha truncated at t-degree `order`.
BiSeries segre_hilbert(const Composition& alpha, int order, SegreMethod method,
                       long budget = kDefaultEnumerationBudget);

}  // namespace pcoinv
