#pragma once

// Descent monomial bases: a_w in P_alpha and b_w in R_alpha.

#include <string>
#include <vector>

#include "pcoinv/combinat.hpp"
#include "pcoinv/deform.hpp"
#include "pcoinv/mpoly.hpp"
#include "pcoinv/segre.hpp"

namespace pcoinv {

struct DescentMonomial {
  Word word;
  LatticePath path;
  std::vector<Point> descent_points;
  std::vector<SegreGenerator> factors;  // y_{I_p}, one per descent point
  SegreMonomial monomial;               // their product in T_alpha
  int des = 0;
  int maj = 0;

  /// `y[0,1]*y[1,2]`, or `1` for the empty product.
  std::string factors_string() const;
};

DescentMonomial a_monomial(const Composition& alpha, const Word& w);

/// The fibre image of y_w: each descent point (i_1..i_k) gives prod_{j: i_j > 0} u_j^{(i_j)}.
MPoly b_polynomial(const Presentation& p, const Word& w);
MPoly b_polynomial(const Composition& alpha, const Word& w);

struct BasisCheck {
  int r = -1;  // first degree; -1 for the singly graded R_alpha check
  int e = 0;
  int count = 0;  // basis candidates in this degree
  int dim = 0;    // quotient dimension
  int rank = 0;   // rank of the candidates modulo the ideal piece
  bool ok = false;
};

struct BasisReport {
  bool ok = false;
  std::vector<BasisCheck> checks;
  std::string witness;
};

BasisReport verify_a_basis(const Composition& alpha);
BasisReport verify_b_basis(const Composition& alpha);

struct DeformedBasisEntry {
  Word word;
  int maj = 0;
  MPoly b;            // in the presentation ring
  MPoly reduced;      // after eliminating variables
  MPoly normal_form;  // modulo the eliminated relations
};

/// b_w for every word, rewritten in the eliminated presentation.
std::vector<DeformedBasisEntry> deformed_basis(const Composition& alpha);

}  // namespace pcoinv
