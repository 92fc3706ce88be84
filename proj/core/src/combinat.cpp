#include "pcoinv/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pcoinv {

int total(const std::vector<int>& parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

bool is_composition(const Composition& alpha) {
  if (alpha.empty()) return false;
  return std::all_of(alpha.begin(), alpha.end(), [](int a) { return a >= 1; });
}

bool is_partition(const Partition& lambda) {
  if (!is_composition(lambda)) return false;
  return std::is_sorted(lambda.rbegin(), lambda.rend());
}

Composition parse_composition(const std::string& text) {
  Composition out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed composition: '" + text + "'");
    }
    if (used != item.size() || v < 1) throw std::invalid_argument("malformed composition: '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty composition");
  return out;
}

Partition parse_partition(const std::string& text) {
  Partition p = parse_composition(text);
  if (!is_partition(p)) throw std::invalid_argument("partition parts must be weakly decreasing: '" + text + "'");
  return p;
}

std::string join(const std::vector<int>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(parts[i]);
  }
  return s;
}

Composition ones(int n) { return Composition(static_cast<std::size_t>(n), 1); }
Composition rectangle(int m, int k) { return Composition(static_cast<std::size_t>(k), m); }

Integer multinomial(const Composition& alpha) {
  Integer r = factorial(total(alpha));
  for (int a : alpha) r /= factorial(a);
  return r;
}

std::vector<Word> enumerate_words(const Composition& alpha) {
  Word w;
  for (std::size_t j = 0; j < alpha.size(); ++j) w.insert(w.end(), static_cast<std::size_t>(alpha[j]), static_cast<int>(j) + 1);
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

WordStats word_stats(const Word& w) {
  WordStats s;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) {
      const int pos = static_cast<int>(i) + 1;
      s.descents.push_back(pos);
      ++s.des;
      s.maj += pos;
    }
  }
  return s;
}

std::string word_to_string(const Word& w) {
  const bool digits = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x < 10; });
  if (!digits) return join(w);
  std::string s;
  for (int x : w) s += static_cast<char>('0' + x);
  return s;
}

Word parse_word(const std::string& text) {
  if (text.find(',') != std::string::npos) return parse_composition(text);
  Word w;
  for (char c : text) {
    if (c < '1' || c > '9') throw std::invalid_argument("malformed word: '" + text + "'");
    w.push_back(c - '0');
  }
  if (w.empty()) throw std::invalid_argument("empty word");
  return w;
}

bool is_word_of(const Word& w, const Composition& alpha) {
  std::vector<int> count(alpha.size(), 0);
  for (int x : w) {
    if (x < 1 || x > static_cast<int>(alpha.size())) return false;
    ++count[static_cast<std::size_t>(x - 1)];
  }
  return count == alpha;
}

LatticePath word_to_path(const Word& w, int k) {
  LatticePath path;
  Point p(static_cast<std::size_t>(k), 0);
  path.push_back(p);
  for (int x : w) {
    if (x < 1 || x > k) throw std::invalid_argument("letter out of range");
    ++p[static_cast<std::size_t>(x - 1)];
    path.push_back(p);
  }
  return path;
}

Word path_to_word(const LatticePath& path) {
  Word w;
  for (std::size_t i = 1; i < path.size(); ++i) {
    int letter = 0;
    int moved = 0;
    for (std::size_t j = 0; j < path[i].size(); ++j) {
      const int d = path[i][j] - path[i - 1][j];
      if (d == 1) {
        letter = static_cast<int>(j) + 1;
        ++moved;
      } else if (d != 0) {
        moved = 2;
      }
    }
    if (moved != 1) throw std::invalid_argument("path step is not a unit vector");
    w.push_back(letter);
  }
  return w;
}

std::vector<Point> path_descent_points(const LatticePath& path) {
  std::vector<Point> out;
  for (int i : word_stats(path_to_word(path)).descents) out.push_back(path[static_cast<std::size_t>(i)]);
  return out;
}

namespace {

void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

void compositions_rec(int n, Composition& cur, std::vector<Composition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = 1; p <= n; ++p) {
    cur.push_back(p);
    compositions_rec(n - p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Composition> enumerate_compositions(int n) {
  if (n < 1) throw std::invalid_argument("compositions need n >= 1");
  std::vector<Composition> out;
  Composition cur;
  compositions_rec(n, cur, out);
  return out;
}

std::vector<Permutation> enumerate_permutations(int n) {
  Permutation p = identity_permutation(n);
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Partition cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  Partition mu;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    mu.push_back(len);
  }
  std::sort(mu.rbegin(), mu.rend());
  return mu;
}

Integer centralizer_order(const Partition& mu) {
  Integer z = 1;
  std::size_t i = 0;
  while (i < mu.size()) {
    std::size_t j = i;
    while (j < mu.size() && mu[j] == mu[i]) ++j;
    const int m = static_cast<int>(j - i);
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(mu[i]), static_cast<unsigned long>(m));
    z *= pw * factorial(m);
    i = j;
  }
  return z;
}

Permutation permutation_of_cycle_type(const Partition& mu) {
  Permutation p(static_cast<std::size_t>(total(mu)));
  int start = 0;
  for (int len : mu) {
    for (int j = 0; j < len; ++j) p[static_cast<std::size_t>(start + j)] = start + (j + 1) % len;
    start += len;
  }
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

Word permutation_word(const Permutation& p) {
  Word w;
  for (int x : p) w.push_back(x + 1);
  return w;
}

namespace {

void syt_rec(int next, int n, Tableau& t, std::vector<int>& row_of, std::vector<SytEntry>& out) {
  if (next > n) {
    SytEntry e;
    e.tableau = t;
    for (int i = 1; i < n; ++i) {
      if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)]) {
        ++e.des;
        e.maj += i;
      }
    }
    out.push_back(std::move(e));
    return;
  }
  for (std::size_t r = 0; r < t.shape.size(); ++r) {
    const auto len = t.rows[r].size();
    if (static_cast<int>(len) >= t.shape[r]) continue;
    if (r > 0 && t.rows[r - 1].size() <= len) continue;
    t.rows[r].push_back(next);
    row_of[static_cast<std::size_t>(next)] = static_cast<int>(r);
    syt_rec(next + 1, n, t, row_of, out);
    t.rows[r].pop_back();
  }
}

}  // namespace

std::vector<SytEntry> enumerate_syt(const Partition& lambda) {
  if (!is_partition(lambda)) throw std::invalid_argument("shape must be a partition");
  const int n = total(lambda);
  Tableau t;
  t.shape = lambda;
  t.rows.assign(lambda.size(), {});
  std::vector<int> row_of(static_cast<std::size_t>(n) + 1, 0);
  std::vector<SytEntry> out;
  syt_rec(1, n, t, row_of, out);
  return out;
}

Integer syt_count(const Partition& lambda) {
  Integer hooks = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      int below = 0;
      for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k) ++below;
      hooks *= lambda[i] - j + below;
    }
  }
  return factorial(total(lambda)) / hooks;
}

}  // namespace pcoinv
