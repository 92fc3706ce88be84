#include "pcoinv/modular.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "pcoinv/matrix.hpp"

namespace pcoinv {

void SparseIntMatrix::add_row(std::vector<std::pair<int, long>> entries) {
  std::sort(entries.begin(), entries.end());
  SparseRow row;
  for (const auto& [c, v] : entries) {
    if (c < 0 || c >= cols_) throw std::out_of_range("sparse row column out of range");
    if (!row.empty() && row.back().first == c) {
      row.back().second += v;
      if (row.back().second == 0) row.pop_back();
    } else if (v != 0) {
      row.emplace_back(c, v);
    }
  }
  rows_.push_back(std::move(row));
}

const char* to_string(SpanMethod m) {
  switch (m) {
    case SpanMethod::full_rank_mod_p: return "full_rank_mod_p";
    case SpanMethod::multimodular_verified: return "multimodular_verified";
    case SpanMethod::exact_elimination: return "exact_elimination";
  }
  return "unknown";
}

std::vector<Rational> SpanComplement::quotient_coords(
    const std::vector<std::pair<int, Rational>>& v) const {
  std::vector<Rational> out(kernel.size());
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    Rational s = 0;
    for (const auto& [c, x] : v) {
      const Rational& k = kernel[i][static_cast<std::size_t>(c)];
      if (k != 0) s += k * x;
    }
    out[i] = s;
  }
  return out;
}

std::vector<Rational> SpanComplement::quotient_coords(const SparseRow& v) const {
  std::vector<std::pair<int, Rational>> w;
  w.reserve(v.size());
  for (const auto& [c, x] : v) w.emplace_back(c, Rational(x));
  return quotient_coords(w);
}

const std::vector<std::uint64_t>& word_primes(int count) {
  static std::mutex mu;
  static std::vector<std::uint64_t> primes;
  std::lock_guard<std::mutex> lock(mu);
  Integer candidate = primes.empty() ? Integer((1UL << 31) - 1) : Integer(primes.back() - 2);
  while (static_cast<int>(primes.size()) < count) {
    if (mpz_probab_prime_p(candidate.get_mpz_t(), 30) > 0) primes.push_back(candidate.get_ui());
    candidate -= 2;
  }
  return primes;
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

std::uint64_t to_mod(long v, std::uint64_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return static_cast<std::uint64_t>(r);
}

// Row echelon form over F_p, built one input row at a time.
struct ModEchelon {
  std::uint64_t p = 0;
  int cols = 0;
  std::vector<int> pivot_cols;
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<int> row_of_col;

  int rank() const { return static_cast<int>(rows.size()); }
};

ModEchelon echelon_mod_p(const SparseIntMatrix& a, std::uint64_t p) {
  ModEchelon e;
  e.p = p;
  e.cols = a.cols();
  e.row_of_col.assign(static_cast<std::size_t>(a.cols()), -1);
  const auto ncols = static_cast<std::size_t>(a.cols());
  std::vector<std::uint64_t> v(ncols);
  for (const auto& row : a.row_list()) {
    if (e.rank() == a.cols()) break;
    if (row.empty()) continue;
    std::fill(v.begin(), v.end(), 0);
    for (const auto& [c, x] : row) v[static_cast<std::size_t>(c)] = to_mod(x, p);
    std::size_t lead = ncols;
    for (std::size_t c = static_cast<std::size_t>(row.front().first); c < ncols; ++c) {
      if (v[c] == 0) continue;
      const int r = e.row_of_col[c];
      if (r < 0) {
        if (lead == ncols) lead = c;
        continue;
      }
      const std::uint64_t f = p - v[c];
      const auto& prow = e.rows[static_cast<std::size_t>(r)];
      for (std::size_t j = c; j < ncols; ++j) {
        if (prow[j]) v[j] = (v[j] + f * prow[j]) % p;
      }
    }
    if (lead == ncols) continue;
    const std::uint64_t inv = inv_mod(v[lead], p);
    for (std::size_t j = lead; j < ncols; ++j) v[j] = v[j] * inv % p;
    e.row_of_col[lead] = e.rank();
    e.pivot_cols.push_back(static_cast<int>(lead));
    e.rows.push_back(v);
  }
  return e;
}

void reduce_to_rref(ModEchelon& e) {
  // Order rows by pivot column, then clear above each pivot.
  std::vector<int> order(e.rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return e.pivot_cols[static_cast<std::size_t>(x)] < e.pivot_cols[static_cast<std::size_t>(y)];
  });
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<int> pivots;
  for (int i : order) {
    rows.push_back(std::move(e.rows[static_cast<std::size_t>(i)]));
    pivots.push_back(e.pivot_cols[static_cast<std::size_t>(i)]);
  }
  const auto ncols = static_cast<std::size_t>(e.cols);
  for (std::size_t i = rows.size(); i-- > 0;) {
    const auto c = static_cast<std::size_t>(pivots[i]);
    for (std::size_t k = 0; k < i; ++k) {
      const std::uint64_t x = rows[k][c];
      if (x == 0) continue;
      const std::uint64_t f = e.p - x;
      for (std::size_t j = c; j < ncols; ++j) {
        if (rows[i][j]) rows[k][j] = (rows[k][j] + f * rows[i][j]) % e.p;
      }
    }
  }
  e.rows = std::move(rows);
  e.pivot_cols = std::move(pivots);
  std::fill(e.row_of_col.begin(), e.row_of_col.end(), -1);
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
    e.row_of_col[static_cast<std::size_t>(e.pivot_cols[i])] = static_cast<int>(i);
  }
}

SpanComplement exact_complement(const SparseIntMatrix& a) {
  SpanComplement out;
  out.ambient_dim = a.cols();
  out.method = SpanMethod::exact_elimination;
  ExactMatrix<Rational> m(a.rows(), a.cols(), Rational(0));
  for (int i = 0; i < a.rows(); ++i) {
    for (const auto& [c, x] : a.row(i)) m(i, c) = x;
  }
  const Rref r = rref(std::move(m));
  out.rank = r.rank();
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int c : r.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    out.free_cols.push_back(f);
    std::vector<Rational> k(static_cast<std::size_t>(a.cols()));
    k[static_cast<std::size_t>(f)] = 1;
    for (int i = 0; i < r.rank(); ++i) {
      k[static_cast<std::size_t>(r.pivots[static_cast<std::size_t>(i)])] = -r.matrix(i, f);
    }
    out.kernel.push_back(std::move(k));
  }
  return out;
}

bool annihilates(const SparseIntMatrix& a, const std::vector<std::vector<Rational>>& kernel) {
  for (const auto& row : a.row_list()) {
    for (const auto& k : kernel) {
      Rational s = 0;
      for (const auto& [c, x] : row) {
        const Rational& kc = k[static_cast<std::size_t>(c)];
        if (kc != 0) s += kc * x;
      }
      if (s != 0) return false;
    }
  }
  return true;
}

}  // namespace

int rank_mod_p(const SparseIntMatrix& a, std::uint64_t p) { return echelon_mod_p(a, p).rank(); }

bool rational_reconstruct(const Integer& u, const Integer& m, Rational& out) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  Integer r0 = m, r1 = u % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    const Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = Rational(r1, t1);
  out.canonicalize();
  return true;
}

SpanComplement span_complement(const SparseIntMatrix& a, const SpanOptions& options) {
  if (options.force_exact) return exact_complement(a);

  SpanComplement out;
  out.ambient_dim = a.cols();
  const auto& primes = word_primes(options.max_primes);

  int best_rank = -1;
  std::vector<int> pivots;
  std::vector<int> free_cols;
  // residues[i][j]: entry of kernel vector i at pivot column pivots[j]
  std::vector<std::vector<Integer>> residues;
  Integer modulus = 1;
  int used = 0;

  for (int pi = 0; pi < options.max_primes; ++pi) {
    const std::uint64_t p = primes[static_cast<std::size_t>(pi)];
    ModEchelon e = echelon_mod_p(a, p);
    ++used;
    if (e.rank() == a.cols()) {
      out.rank = a.cols();
      out.method = SpanMethod::full_rank_mod_p;
      out.primes_used = used;
      return out;
    }
    if (e.rank() < best_rank) continue;  // unlucky prime
    reduce_to_rref(e);
    std::vector<int> fc;
    for (int c = 0; c < a.cols(); ++c) {
      if (e.row_of_col[static_cast<std::size_t>(c)] < 0) fc.push_back(c);
    }
    if (e.rank() > best_rank || fc != free_cols) {
      best_rank = e.rank();
      pivots = e.pivot_cols;
      free_cols = fc;
      residues.assign(free_cols.size(), std::vector<Integer>(pivots.size(), 0));
      modulus = 1;
    }
    // CRT: combine residues mod `modulus` with residues mod p.
    const Integer pz(static_cast<unsigned long>(p));
    Integer minv;
    mpz_invert(minv.get_mpz_t(), Integer(modulus % pz).get_mpz_t(), pz.get_mpz_t());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
      const auto f = static_cast<std::size_t>(free_cols[i]);
      for (std::size_t j = 0; j < pivots.size(); ++j) {
        const std::uint64_t x = e.rows[j][f];
        const std::uint64_t val = x == 0 ? 0 : p - x;
        Integer& r = residues[i][j];
        Integer diff = (Integer(static_cast<unsigned long>(val)) - r) % pz;
        if (diff < 0) diff += pz;
        Integer k = diff * minv % pz;
        r += modulus * k;
      }
    }
    modulus *= pz;

    std::vector<std::vector<Rational>> kernel(free_cols.size(),
                                              std::vector<Rational>(static_cast<std::size_t>(a.cols())));
    bool ok = true;
    for (std::size_t i = 0; i < free_cols.size() && ok; ++i) {
      kernel[i][static_cast<std::size_t>(free_cols[i])] = 1;
      for (std::size_t j = 0; j < pivots.size() && ok; ++j) {
        Rational x;
        ok = rational_reconstruct(residues[i][j], modulus, x);
        kernel[i][static_cast<std::size_t>(pivots[j])] = x;
      }
    }
    if (ok && annihilates(a, kernel)) {
      out.rank = best_rank;
      out.free_cols = free_cols;
      out.kernel = std::move(kernel);
      out.method = SpanMethod::multimodular_verified;
      out.primes_used = used;
      return out;
    }
  }
  SpanComplement exact = exact_complement(a);
  exact.primes_used = used;
  return exact;
}

}  // namespace pcoinv
