#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond the GMP rational type and plain containers.

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
/// Dense polynomial in q: p[i] is the coefficient of q^i.
using Poly = std::vector<long>;
/// (t-exponent, q-exponent) -> coefficient.
using Bi = std::map<std::pair<int, int>, long>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

inline Poly add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

inline Poly shift(const Poly& a, int k) {
  if (a.empty()) return a;
  Poly out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

/// Gaussian binomial by the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
inline Poly gauss(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return {1};
  return add(gauss(n - 1, k - 1), shift(gauss(n - 1, k), k));
}

/// Inversion generating function of words with content alpha, built letter by letter.
inline Poly inversion_count(const std::vector<int>& alpha) {
  Poly acc{1};
  int placed = 0;
  for (int a : alpha) {
    acc = mul(acc, gauss(placed + a, a));
    placed += a;
  }
  return acc;
}

inline std::vector<std::vector<int>> words(const std::vector<int>& alpha) {
  std::vector<int> w;
  for (std::size_t j = 0; j < alpha.size(); ++j) w.insert(w.end(), static_cast<std::size_t>(alpha[j]), static_cast<int>(j) + 1);
  std::vector<std::vector<int>> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline std::pair<int, int> des_maj(const std::vector<int>& w) {
  int des = 0, maj = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) {
      ++des;
      maj += static_cast<int>(i) + 1;
    }
  }
  return {des, maj};
}

inline int inversions(const std::vector<int>& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
  }
  return inv;
}

/// sum over words of t^des q^maj.
inline Bi eulerian(const std::vector<int>& alpha) {
  Bi out;
  for (const auto& w : words(alpha)) ++out[des_maj(w)];
  return out;
}

struct Syt {
  int des = 0;
  int maj = 0;
};

/// All standard fillings of lambda, found by filtering every permutation of 1..n.
inline std::vector<Syt> syt_brute(const std::vector<int>& lambda) {
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  std::vector<int> fill(static_cast<std::size_t>(n));
  std::iota(fill.begin(), fill.end(), 1);
  std::vector<Syt> out;
  do {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    for (int len : lambda) {
      rows.emplace_back(fill.begin() + static_cast<long>(pos), fill.begin() + static_cast<long>(pos + static_cast<std::size_t>(len)));
      pos += static_cast<std::size_t>(len);
    }
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r) {
      for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
        if (c + 1 < rows[r].size() && rows[r][c] > rows[r][c + 1]) ok = false;
        if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] > rows[r + 1][c]) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<int> row_of(static_cast<std::size_t>(n) + 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (int v : rows[r]) row_of[static_cast<std::size_t>(v)] = static_cast<int>(r);
    }
    Syt s;
    for (int i = 1; i < n; ++i) {
      if (row_of[static_cast<std::size_t>(i) + 1] > row_of[static_cast<std::size_t>(i)]) {
        ++s.des;
        s.maj += i;
      }
    }
    out.push_back(s);
  } while (std::next_permutation(fill.begin(), fill.end()));
  return out;
}

/// Rank over Q of a dense matrix by plain Gauss-Jordan.
inline int rank(std::vector<std::vector<Q>> m) {
  int r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    std::size_t p = static_cast<std::size_t>(r);
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[static_cast<std::size_t>(r)]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == static_cast<std::size_t>(r) || m[i][c] == 0) continue;
      const Q f = m[i][c] / m[static_cast<std::size_t>(r)][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[static_cast<std::size_t>(r)][j];
    }
    ++r;
  }
  return r;
}

/// Degree-r monomials of the Segre algebra as count vectors c[i][j], 0 <= j <= alpha_i,
/// with sum_j c[i][j] = r for each group i.
using Counts = std::vector<std::vector<int>>;

inline void simplex_points(int len, int r, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len - 1) {
    cur.push_back(r);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= r; ++v) {
    cur.push_back(v);
    simplex_points(len, r - v, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Counts> segre_monomials(const std::vector<int>& alpha, int r) {
  std::vector<Counts> out{Counts{}};
  for (int a : alpha) {
    std::vector<std::vector<int>> pts;
    std::vector<int> cur;
    simplex_points(a + 1, r, cur, pts);
    std::vector<Counts> next;
    for (const auto& c : out) {
      for (const auto& p : pts) {
        Counts d = c;
        d.push_back(p);
        next.push_back(std::move(d));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline int segre_qdeg(const Counts& c) {
  int e = 0;
  for (const auto& g : c) {
    for (std::size_t j = 0; j < g.size(); ++j) e += static_cast<int>(j) * g[j];
  }
  return e;
}

/// Bigraded Hilbert polynomial of T_alpha modulo the sums of equal-q-degree generators,
/// by dense rank in each bidegree.
inline Bi artinian_hilbert(const std::vector<int>& alpha) {
  const int n = std::accumulate(alpha.begin(), alpha.end(), 0);
  std::vector<std::vector<int>> gens;
  {
    std::vector<std::vector<int>> g{{}};
    for (int a : alpha) {
      std::vector<std::vector<int>> next;
      for (const auto& x : g) {
        for (int j = 0; j <= a; ++j) {
          auto y = x;
          y.push_back(j);
          next.push_back(y);
        }
      }
      g = std::move(next);
    }
    gens = std::move(g);
  }
  Bi out;
  for (int r = 0; r <= n + 1; ++r) {
    const auto mons = segre_monomials(alpha, r);
    std::map<int, std::vector<Counts>> by_e;
    for (const auto& m : mons) by_e[segre_qdeg(m)].push_back(m);
    const auto lower = r > 0 ? segre_monomials(alpha, r - 1) : std::vector<Counts>{};
    bool any = false;
    for (const auto& [e, cols] : by_e) {
      std::map<Counts, std::size_t> col;
      for (std::size_t i = 0; i < cols.size(); ++i) col[cols[i]] = i;
      std::vector<std::vector<Q>> rows;
      for (int l = 0; l <= n; ++l) {
        for (const auto& m : lower) {
          if (segre_qdeg(m) != e - l) continue;
          std::vector<Q> row(cols.size(), 0);
          for (const auto& g : gens) {
            if (std::accumulate(g.begin(), g.end(), 0) != l) continue;
            Counts p = m;
            for (std::size_t i = 0; i < g.size(); ++i) ++p[i][static_cast<std::size_t>(g[i])];
            row[col.at(p)] += 1;
          }
          rows.push_back(std::move(row));
        }
      }
      const int dim = static_cast<int>(cols.size()) - rank(rows);
      if (dim != 0) {
        out[{r, e}] = dim;
        any = true;
      }
    }
    if (!any) break;
  }
  return out;
}

/// Numerical rank of the evaluation of x^{a_j} at the S_n orbit of (1, z, ..., z^{n-1}),
/// z = exp(2 pi i / n), by complex Gaussian elimination with partial pivoting.
inline int numeric_evaluation_rank(const std::vector<std::vector<int>>& exponents, int n) {
  const double pi = 3.14159265358979323846;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::complex<double>>> m;
  do {
    std::vector<std::complex<double>> row;
    for (const auto& e : exponents) {
      std::complex<double> v = 1;
      for (int i = 0; i < n; ++i) v *= std::pow(std::polar(1.0, 2 * pi * perm[static_cast<std::size_t>(i)] / n), e[static_cast<std::size_t>(i)]);
      row.push_back(v);
    }
    m.push_back(row);
  } while (std::next_permutation(perm.begin(), perm.end()));
  int r = 0;
  const std::size_t cols = exponents.size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    std::size_t best = static_cast<std::size_t>(r);
    for (std::size_t i = best; i < m.size(); ++i) {
      if (std::abs(m[i][c]) > std::abs(m[best][c])) best = i;
    }
    if (std::abs(m[best][c]) < 1e-8) continue;
    std::swap(m[best], m[static_cast<std::size_t>(r)]);
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < m.size(); ++i) {
      const auto f = m[i][c] / m[static_cast<std::size_t>(r)][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[static_cast<std::size_t>(r)][j];
    }
    ++r;
  }
  return r;
}

/// s_lambda(1, q, ..., q^m) as a sum over semistandard fillings with entries 0..m.
inline Poly ssyt_content(const std::vector<int>& lambda, int m) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  }
  std::map<std::pair<int, int>, int> val;
  Poly out;
  auto rec = [&](auto&& self, std::size_t i, int sum) -> void {
    if (i == cells.size()) {
      if (out.size() <= static_cast<std::size_t>(sum)) out.resize(static_cast<std::size_t>(sum) + 1, 0);
      ++out[static_cast<std::size_t>(sum)];
      return;
    }
    const auto [r, c] = cells[i];
    for (int v = 0; v <= m; ++v) {
      if (c > 0 && val[{r, c - 1}] > v) continue;
      if (r > 0 && val[{r - 1, c}] >= v) continue;
      val[{r, c}] = v;
      self(self, i + 1, sum + v);
    }
  };
  rec(rec, 0, 0);
  trim(out);
  return out;
}

}  // namespace oracle
