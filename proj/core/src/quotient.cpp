#include "pcoinv/quotient.hpp"

#include <algorithm>
#include <stdexcept>

#include "pcoinv/matrix.hpp"

namespace pcoinv {

QuotientAlgebra::QuotientAlgebra(Composition alpha, SpanOptions options)
    : space_(std::move(alpha)), options_(options) {}

const Piece& QuotientAlgebra::piece(int r) {
  auto it = pieces_.find(r);
  if (it == pieces_.end()) it = pieces_.emplace(r, std::make_unique<Piece>(space_, r)).first;
  return *it->second;
}

SparseIntMatrix QuotientAlgebra::ideal_matrix(int r, int e) {
  const Piece& target = piece(r);
  const int base = target.begin(e);
  SparseIntMatrix m(target.count(e));
  if (r < 1 || m.cols() == 0) return m;
  const Piece& prev = piece(r - 1);
  for (int l = 0; l <= space_.n(); ++l) {
    const auto gens = generators_of_degree(space_, l);
    for (int i = prev.begin(e - l); i < prev.end(e - l); ++i) {
      std::vector<std::pair<int, long>> row;
      for (const auto& g : gens) {
        const int idx = target.index(space_.multiply_generator(g, prev.monomial(i)));
        row.emplace_back(idx - base, 1);
      }
      m.add_row(std::move(row));
    }
  }
  return m;
}

const SpanComplement& QuotientAlgebra::complement(int r, int e) {
  const auto key = std::make_pair(r, e);
  auto it = complements_.find(key);
  if (it == complements_.end()) it = complements_.emplace(key, span_complement(ideal_matrix(r, e), options_)).first;
  return it->second;
}

int QuotientAlgebra::ambient_dim(int r, int e) { return piece(r).count(e); }
int QuotientAlgebra::ideal_rank(int r, int e) { return complement(r, e).rank; }
int QuotientAlgebra::quotient_dim(int r, int e) { return complement(r, e).quotient_dim(); }

HilbertResult QuotientAlgebra::hilbert() {
  HilbertResult res;
  for (int r = 0;; ++r) {
    bool zero_row = true;
    for (int e = 0; e <= r * space_.n(); ++e) {
      const int d = quotient_dim(r, e);
      if (d != 0) {
        zero_row = false;
        res.series.add_term(r, e, d);
      }
    }
    res.rows = r + 1;
    if (zero_row) {
      res.ok = true;
      return res;
    }
    if (r >= cap()) {
      res.message = "nonzero quotient at first degree " + std::to_string(r) + " beyond the cap r <= n";
      return res;
    }
  }
}

Rational QuotientAlgebra::trace(const Permutation& g, int r, int e) {
  const SpanComplement& sc = complement(r, e);
  if (sc.quotient_dim() == 0) return 0;
  const Piece& p = piece(r);
  const int base = p.begin(e);
  Rational tr = 0;
  for (std::size_t i = 0; i < sc.free_cols.size(); ++i) {
    const int image = p.index(space_.act(g, p.monomial(base + sc.free_cols[i]))) - base;
    tr += sc.kernel[i][static_cast<std::size_t>(image)];
  }
  return tr;
}

Rational QuotientAlgebra::ambient_trace(const Permutation& g, int r, int e) {
  const Piece& p = piece(r);
  long fixed = 0;
  for (int i = p.begin(e); i < p.end(e); ++i) {
    if (space_.act(g, p.monomial(i)) == p.monomial(i)) ++fixed;
  }
  return Rational(fixed);
}

Rational QuotientAlgebra::trace_ambient_minus_ideal(const Permutation& g, int r, int e) {
  const Piece& p = piece(r);
  const int base = p.begin(e);
  const int cols = p.count(e);
  const SparseIntMatrix im = ideal_matrix(r, e);
  ExactMatrix<Rational> dense(im.rows(), cols, Rational(0));
  for (int i = 0; i < im.rows(); ++i) {
    for (const auto& [c, x] : im.row(i)) dense(i, c) = x;
  }
  const Rref rr = rref(std::move(dense));
  std::vector<int> image(static_cast<std::size_t>(cols));
  for (int c = 0; c < cols; ++c) image[static_cast<std::size_t>(c)] = p.index(space_.act(g, p.monomial(base + c))) - base;
  // Express g * B_j in the reduced basis B; the coefficients sit at the pivot columns.
  Rational ideal_tr = 0;
  for (int j = 0; j < rr.rank(); ++j) {
    std::vector<Rational> v(static_cast<std::size_t>(cols));
    for (int c = 0; c < cols; ++c) v[static_cast<std::size_t>(image[static_cast<std::size_t>(c)])] = rr.matrix(j, c);
    std::vector<Rational> rest = v;
    for (int i = 0; i < rr.rank(); ++i) {
      const Rational coef = v[static_cast<std::size_t>(rr.pivots[static_cast<std::size_t>(i)])];
      if (coef == 0) continue;
      for (int c = 0; c < cols; ++c) rest[static_cast<std::size_t>(c)] -= coef * rr.matrix(i, c);
    }
    for (const auto& x : rest) {
      if (x != 0) throw std::logic_error("ideal piece is not stable under the group action");
    }
    ideal_tr += v[static_cast<std::size_t>(rr.pivots[static_cast<std::size_t>(j)])];
  }
  return ambient_trace(g, r, e) - ideal_tr;
}

std::vector<Rational> QuotientAlgebra::quotient_coords(const SegreMonomial& m) {
  const int e = space_.q_degree(m);
  const Piece& p = piece(m.r);
  const int idx = p.index(m);
  if (idx < 0) throw std::invalid_argument("monomial not in T_alpha");
  return complement(m.r, e).quotient_coords(SparseRow{{idx - p.begin(e), 1}});
}

int ideal_rank(const Composition& alpha, int r, int e) { return QuotientAlgebra(alpha).ideal_rank(r, e); }

HilbertResult hilbert_P(const Composition& alpha) { return QuotientAlgebra(alpha).hilbert(); }

Rational trace_on_quotient(const Composition& alpha, const Permutation& g, int r, int e) {
  return QuotientAlgebra(alpha).trace(g, r, e);
}

ClassTraceTable::ClassTraceTable(int n, SpanOptions options) : n_(n), pn_(ones(n), options) {}

Rational ClassTraceTable::trace(const Partition& mu, int r, int e) {
  auto& row = cache_[{r, e}];
  auto it = row.find(mu);
  if (it != row.end()) return it->second;
  const Rational v = pn_.trace(permutation_of_cycle_type(mu), r, e);
  row.emplace(mu, v);
  return v;
}

namespace {

// Cycle types of S_alpha classes with weight 1 / prod z, merged by S_n cycle type.
std::map<Partition, Rational> young_class_weights(const Composition& alpha) {
  std::map<Partition, Rational> out;
  std::vector<std::vector<Partition>> per_block;
  for (int a : alpha) per_block.push_back(enumerate_partitions(a));
  std::vector<std::size_t> idx(per_block.size(), 0);
  while (true) {
    Partition mu;
    Rational w = 1;
    for (std::size_t b = 0; b < per_block.size(); ++b) {
      const Partition& part = per_block[b][idx[b]];
      mu.insert(mu.end(), part.begin(), part.end());
      w /= Rational(centralizer_order(part));
    }
    std::sort(mu.rbegin(), mu.rend());
    out[mu] += w;
    std::size_t b = 0;
    while (b < idx.size()) {
      if (++idx[b] < per_block[b].size()) break;
      idx[b] = 0;
      ++b;
    }
    if (b == idx.size()) break;
  }
  return out;
}

}  // namespace

Integer invariant_dim(ClassTraceTable& table, const Composition& alpha, int r, int e) {
  if (total(alpha) != table.n()) throw std::invalid_argument("alpha must be a composition of n");
  Rational d = 0;
  for (const auto& [mu, w] : young_class_weights(alpha)) d += w * table.trace(mu, r, e);
  if (!is_integral(d) || d < 0) throw std::logic_error("invariant dimension is not a nonnegative integer");
  return d.get_num();
}

Integer invariant_dim(int n, const Composition& alpha, int r, int e) {
  ClassTraceTable table(n);
  return invariant_dim(table, alpha, r, e);
}

BiPoly invariant_hilbert(ClassTraceTable& table, const Composition& alpha) {
  BiPoly out;
  const int n = table.n();
  for (int r = 0; r <= n; ++r) {
    for (int e = 0; e <= r * n; ++e) {
      if (table.algebra().quotient_dim(r, e) == 0) continue;
      const Integer d = invariant_dim(table, alpha, r, e);
      if (d != 0) out.add_term(r, e, Rational(d));
    }
  }
  return out;
}

}  // namespace pcoinv
