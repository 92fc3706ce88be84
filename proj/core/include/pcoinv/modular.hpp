#pragma once

// Exact complement of a row span inside Q^cols for large sparse integer
// matrices. The span W is reduced modulo word-size primes; its annihilator
// W^perp is lifted by CRT and rational reconstruction and then verified
// exactly (A * K == 0 over Q). A mod-p rank is a lower bound for the rank
// over Q, and a verified K of dimension cols - rank_p is an upper bound, so a
// verified result is exact. Inputs that never verify fall back to dense
// elimination over Q.

#include <cstdint>
#include <utility>
#include <vector>

#include "pcoinv/rational.hpp"

namespace pcoinv {

/// Sparse row: (column, value) pairs, strictly increasing columns, nonzero values.
using SparseRow = std::vector<std::pair<int, long>>;

class SparseIntMatrix {
 public:
  explicit SparseIntMatrix(int cols) : cols_(cols) {}
  int cols() const { return cols_; }
  int rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseRow>& row_list() const { return rows_; }
  const SparseRow& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

  /// Adds a row given as unsorted (column, value) pairs; duplicates are summed.
  void add_row(std::vector<std::pair<int, long>> entries);

 private:
  int cols_;
  std::vector<SparseRow> rows_;
};

enum class SpanMethod {
  full_rank_mod_p,       // rank_p == cols, nothing to lift
  multimodular_verified, // lifted annihilator verified over Q
  exact_elimination      // dense elimination over Q
};

const char* to_string(SpanMethod m);

/// Row span W of a matrix together with an exact basis of V / W.
struct SpanComplement {
  int ambient_dim = 0;
  int rank = 0;
  /// Columns whose unit vectors project to a basis of V / W.
  std::vector<int> free_cols;
  /// Basis of W^perp; kernel[i][free_cols[j]] == (i == j).
  std::vector<std::vector<Rational>> kernel;
  SpanMethod method = SpanMethod::full_rank_mod_p;
  int primes_used = 0;

  int quotient_dim() const { return ambient_dim - rank; }
  /// Coordinates of v + W in the basis {e_f + W : f in free_cols}.
  std::vector<Rational> quotient_coords(const std::vector<std::pair<int, Rational>>& v) const;
  std::vector<Rational> quotient_coords(const SparseRow& v) const;
};

struct SpanOptions {
  bool force_exact = false;  // skip modular arithmetic entirely
  int max_primes = 64;
};

SpanComplement span_complement(const SparseIntMatrix& a, const SpanOptions& options = {});

/// Rank of a over F_p (p < 2^31).
int rank_mod_p(const SparseIntMatrix& a, std::uint64_t p);

/// Descending primes below 2^31.
const std::vector<std::uint64_t>& word_primes(int count);

/// Recovers a/b from u mod m with |a|, b <= sqrt(m/2); returns false if none exists.
bool rational_reconstruct(const Integer& u, const Integer& m, Rational& out);

}  // namespace pcoinv
