#pragma once

// Bigraded pieces of P_alpha = T_alpha / <f~_0, ..., f~_n>.

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "pcoinv/bipoly.hpp"
#include "pcoinv/modular.hpp"
#include "pcoinv/segre.hpp"

namespace pcoinv {

struct HilbertResult {
  BiPoly series;
  bool ok = false;
  int rows = 0;         // first degrees examined
  std::string message;  // reason on failure
};

class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(Composition alpha, SpanOptions options = {});

  const SegreSpace& space() const { return space_; }
  const Composition& alpha() const { return space_.alpha(); }
  /// Iteration cap on the first degree.
  int cap() const { return space_.n(); }

  const Piece& piece(int r);
  /// Rows f~_l * m with m in (T_alpha)_{r-1, e-l}; columns index the (r, e) block of piece(r).
  SparseIntMatrix ideal_matrix(int r, int e);
  const SpanComplement& complement(int r, int e);

  int ambient_dim(int r, int e);
  int ideal_rank(int r, int e);
  int quotient_dim(int r, int e);

  /// Hilbert series, iterating r until a zero row; fails past cap().
  HilbertResult hilbert();

  /// Trace of g on (P_alpha)_{r,e} via the dual action on the annihilator of the ideal piece.
  /// g permutes the k groups (needs alpha = (m^k)).
  Rational trace(const Permutation& g, int r, int e);
  /// Trace on the ambient piece minus trace on the ideal piece, in exact arithmetic.
  Rational trace_ambient_minus_ideal(const Permutation& g, int r, int e);
  /// Number of monomials of (T_alpha)_{r,e} fixed by g.
  Rational ambient_trace(const Permutation& g, int r, int e);

  /// Coordinates of the monomial class [m] in the quotient basis of its bidegree.
  std::vector<Rational> quotient_coords(const SegreMonomial& m);

 private:
  SegreSpace space_;
  SpanOptions options_;
  std::map<int, std::unique_ptr<Piece>> pieces_;
  std::map<std::pair<int, int>, SpanComplement> complements_;
};

int ideal_rank(const Composition& alpha, int r, int e);
HilbertResult hilbert_P(const Composition& alpha);
Rational trace_on_quotient(const Composition& alpha, const Permutation& g, int r, int e);

/// Traces of S_n on the pieces of P_n, one value per cycle type; cached per (r, e).
class ClassTraceTable {
 public:
  explicit ClassTraceTable(int n, SpanOptions options = {});
  int n() const { return n_; }
  QuotientAlgebra& algebra() { return pn_; }
  Rational trace(const Partition& cycle_type, int r, int e);

 private:
  int n_;
  QuotientAlgebra pn_;
  std::map<std::pair<int, int>, std::map<Partition, Rational>> cache_;
};

/// dim (P_n)^{S_alpha}_{r,e}, averaging S_n traces over the classes of S_alpha.
Integer invariant_dim(ClassTraceTable& table, const Composition& alpha, int r, int e);
Integer invariant_dim(int n, const Composition& alpha, int r, int e);
/// All invariant dimensions assembled as a polynomial in (t, q).
BiPoly invariant_hilbert(ClassTraceTable& table, const Composition& alpha);

}  // namespace pcoinv
