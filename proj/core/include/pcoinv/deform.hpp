#pragma once

// Fibres of the deformation family: presentations of R_alpha and its
// s-deformation, graded quotients by per-degree linear algebra, the smooth
// fibre over Q(eta) and the identification of the special fibre with T_n.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcoinv/bipoly.hpp"
#include "pcoinv/combinat.hpp"
#include "pcoinv/modular.hpp"
#include "pcoinv/mpoly.hpp"

namespace pcoinv {

/// Variable name of u_i^{(j)} (group i 0-based, 1 <= j <= alpha_i): `u1..un` when
/// alpha = (1^n), otherwise one letter per group with index j (`u1, u2, v1`).
std::string deform_variable_name(const Composition& alpha, int group, int j);

struct Presentation {
  Composition alpha;
  RingPtr ring;                  // u_i^{(j)} group-major, then `s` when symbolic
  bool symbolic_s = false;
  Rational s_value = 0;          // used when not symbolic
  std::vector<MPoly> generators; // generators[d-1] has degree d, d = 1..n

  int var(int group, int j) const;
  int s_var() const;  // requires symbolic_s
};

/// Degree-homogeneous components of prod_i (1 + sum_j u_i^{(j)}) - (1 + s).
Presentation presentation_R(const Composition& alpha, const Rational& s = 0);
/// As presentation_R with s a variable of degree n.
Presentation presentation_R_symbolic(const Composition& alpha);

struct Elimination {
  RingPtr ring;                                // ring of the presentation
  RingPtr reduced_ring;                        // kept variables (and s)
  std::vector<int> kept;                       // presentation variables kept, in order
  std::vector<std::pair<int, MPoly>> substitutions;  // eliminated variable -> value (presentation ring)
  std::vector<MPoly> relations;                // in reduced_ring, positive leading coefficients

  /// Substitutes every eliminated variable and maps into reduced_ring.
  MPoly reduce(const MPoly& p) const;
};

/// For d = 1..max alpha_i, solves g_d for the last variable of degree d; the
/// remaining generators, rewritten, are the relations.
Elimination eliminate(const Presentation& p);

/// Homogeneous quotient Q[vars]/I with I generated by integer polynomials,
/// computed degree by degree. Monomials are ordered descending, so the
/// standard monomials (free columns) form the normal-form basis.
class GradedQuotient {
 public:
  GradedQuotient(RingPtr ring, std::vector<MPoly> relations, SpanOptions options = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Exponent>& monomials(int d);
  SparseIntMatrix ideal_matrix(int d);
  const SpanComplement& complement(int d);
  int dim(int d);
  /// Coordinates of a homogeneous polynomial of degree d on the standard monomials.
  std::vector<Rational> coords(const MPoly& p, int d);
  /// Normal form: each homogeneous component rewritten in standard monomials.
  MPoly normal_form(const MPoly& p);
  std::vector<Exponent> standard_monomials(int d);

  struct Series {
    QPoly series;
    bool ok = false;
    int degrees_checked = 0;
    std::string message;
  };
  /// Stops after max-variable-degree consecutive zero degrees; fails past cap.
  Series hilbert(int cap);

 private:
  RingPtr ring_;
  std::vector<MPoly> relations_;
  SpanOptions options_;
  std::map<int, std::vector<Exponent>> monomials_;
  std::map<int, std::map<Exponent, int>> index_;
  std::map<int, SpanComplement> complements_;
};

struct HilbertRResult {
  QPoly series;
  bool ok = false;
  std::string message;
};

/// q-Hilbert series of R_alpha (s = 0), on the eliminated presentation.
HilbertRResult hilbert_R(const Composition& alpha);
/// Same computation on the full presentation without elimination.
HilbertRResult hilbert_R_full(const Composition& alpha);

struct FibreReport {
  int n = 0;
  Rational s1;             // value of e_n on the fibre
  int points = 0;
  int rank = 0;
  bool relations_ok = false;
  bool distinct_ok = false;
  bool ok = false;
  std::string witness;     // first failure, if any
  std::string note;
};

/// Orbit of (1, eta, ..., eta^{n-1}) in Q(eta)^n and the evaluation rank of the descent monomials.
FibreReport semisimple_fibre_check(int n);

/// Descent monomial prod_{i in Des(sigma)} prod_{j <= i} u_{sigma(j)} as an exponent vector.
Exponent garsia_stanton_exponent(const Word& sigma);

struct FibreIsoReport {
  int n = 0;
  bool ok = false;
  int subsets = 0;
  int relation_steps = 0;
  int elementary_checked = 0;
  std::string witness;
};

/// Checks psi(prod_{i in I} u_i) = x_I and psi(e_k) = e~_k in T_n with x_empty = 1.
FibreIsoReport fibre_isomorphism_check(int n);

}  // namespace pcoinv
