#include "pcoinv/segre.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcoinv {

SegreSpace::SegreSpace(Composition alpha) : alpha_(std::move(alpha)), n_(total(alpha_)) {
  if (!is_composition(alpha_)) throw std::invalid_argument("alpha must be a composition");
  int off = 0;
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    offset_.push_back(off);
    for (int l = 1; l <= alpha_[i]; ++l) {
      group_of_.push_back(static_cast<int>(i));
      part_of_.push_back(l);
    }
    off += alpha_[i];
  }
}

bool SegreSpace::is_rectangular() const {
  return std::all_of(alpha_.begin(), alpha_.end(), [&](int a) { return a == alpha_.front(); });
}

int SegreSpace::q_degree(const SegreMonomial& m) const {
  int e = 0;
  for (int s = 0; s < n_; ++s) e += part_of_[static_cast<std::size_t>(s)] * m.counts[static_cast<std::size_t>(s)];
  return e;
}

std::vector<Partition> SegreSpace::partitions(const SegreMonomial& m) const {
  std::vector<Partition> out(alpha_.size());
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    for (int l = alpha_[i]; l >= 1; --l) {
      const int c = m.counts[static_cast<std::size_t>(slot(static_cast<int>(i), l))];
      out[i].insert(out[i].end(), static_cast<std::size_t>(c), l);
    }
  }
  return out;
}

SegreMonomial SegreSpace::from_partitions(int r, const std::vector<Partition>& parts) const {
  if (parts.size() != alpha_.size()) throw std::invalid_argument("wrong number of partitions");
  SegreMonomial m{r, std::vector<int>(static_cast<std::size_t>(n_), 0)};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int l : parts[i]) {
      if (l == 0) continue;
      if (l < 0 || l > alpha_[i]) throw std::invalid_argument("part exceeds alpha_i");
      ++m.counts[static_cast<std::size_t>(slot(static_cast<int>(i), l))];
    }
  }
  if (!is_valid(m)) throw std::invalid_argument("too many parts for first degree r");
  return m;
}

bool SegreSpace::is_valid(const SegreMonomial& m) const {
  if (m.r < 0 || static_cast<int>(m.counts.size()) != n_) return false;
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    int s = 0;
    for (int l = 1; l <= alpha_[i]; ++l) {
      const int c = m.counts[static_cast<std::size_t>(slot(static_cast<int>(i), l))];
      if (c < 0) return false;
      s += c;
    }
    if (s > m.r) return false;
  }
  return true;
}

SegreMonomial SegreSpace::unit(int r) const { return SegreMonomial{r, std::vector<int>(static_cast<std::size_t>(n_), 0)}; }

SegreMonomial SegreSpace::generator(const SegreGenerator& g) const { return multiply_generator(g, unit(0)); }

std::vector<SegreGenerator> SegreSpace::generators() const {
  std::vector<SegreGenerator> out;
  SegreGenerator g(alpha_.size(), 0);
  while (true) {
    out.push_back(g);
    std::size_t i = 0;
    while (i < g.size()) {
      if (++g[i] <= alpha_[i]) break;
      g[i] = 0;
      ++i;
    }
    if (i == g.size()) break;
  }
  return out;
}

SegreMonomial SegreSpace::multiply_generator(const SegreGenerator& g, const SegreMonomial& m) const {
  if (g.size() != alpha_.size()) throw std::invalid_argument("generator has wrong length");
  SegreMonomial out = m;
  ++out.r;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] < 0 || g[i] > alpha_[i]) throw std::invalid_argument("generator index out of range");
    if (g[i] > 0) ++out.counts[static_cast<std::size_t>(slot(static_cast<int>(i), g[i]))];
  }
  return out;
}

SegreMonomial SegreSpace::multiply(const SegreMonomial& a, const SegreMonomial& b) const {
  SegreMonomial out = a;
  out.r += b.r;
  for (std::size_t s = 0; s < out.counts.size(); ++s) out.counts[s] += b.counts[s];
  return out;
}

SegreMonomial SegreSpace::act(const Permutation& perm, const SegreMonomial& m) const {
  if (!is_rectangular()) throw std::invalid_argument("group action needs alpha of the form (m^k)");
  if (static_cast<int>(perm.size()) != k()) throw std::invalid_argument("permutation size must equal k");
  const int width = alpha_.front();
  SegreMonomial out{m.r, std::vector<int>(m.counts.size(), 0)};
  for (int i = 0; i < k(); ++i) {
    const int to = perm[static_cast<std::size_t>(i)];
    for (int l = 0; l < width; ++l) {
      out.counts[static_cast<std::size_t>(to * width + l)] = m.counts[static_cast<std::size_t>(i * width + l)];
    }
  }
  return out;
}

std::vector<int> SegreSpace::order_key(const SegreMonomial& m) const {
  std::vector<int> key;
  for (const Partition& p : partitions(m)) {
    key.insert(key.end(), p.begin(), p.end());
    key.insert(key.end(), static_cast<std::size_t>(m.r) - p.size(), 0);
  }
  return key;
}

bool SegreSpace::canonical_less(const SegreMonomial& a, const SegreMonomial& b) const {
  if (a.r != b.r) return a.r < b.r;
  const int ea = q_degree(a), eb = q_degree(b);
  if (ea != eb) return ea < eb;
  return order_key(a) < order_key(b);
}

std::string SegreSpace::to_string(const SegreMonomial& m) const {
  std::string s = "r=" + std::to_string(m.r) + "; [";
  const auto parts = partitions(m);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += "|";
    s += join(parts[i]);
  }
  return s + "]";
}

Piece::Piece(const SegreSpace& space, int r) : r_(r) {
  if (r < 0) throw std::invalid_argument("negative first degree");
  // Per-group count vectors with sum <= r.
  std::vector<std::vector<std::vector<int>>> group_choices;
  for (int a : space.alpha()) {
    std::vector<std::vector<int>> choices;
    std::vector<int> c(static_cast<std::size_t>(a), 0);
    while (true) {
      choices.push_back(c);
      int s = total(c);
      std::size_t i = 0;
      while (i < c.size()) {
        if (s < r) {
          ++c[i];
          break;
        }
        s -= c[i];
        c[i] = 0;
        ++i;
      }
      if (i == c.size()) break;
    }
    group_choices.push_back(std::move(choices));
  }
  std::vector<std::size_t> idx(group_choices.size(), 0);
  while (true) {
    SegreMonomial m{r, {}};
    for (std::size_t g = 0; g < group_choices.size(); ++g) {
      const auto& c = group_choices[g][idx[g]];
      m.counts.insert(m.counts.end(), c.begin(), c.end());
    }
    basis_.push_back(std::move(m));
    std::size_t g = 0;
    while (g < idx.size()) {
      if (++idx[g] < group_choices[g].size()) break;
      idx[g] = 0;
      ++g;
    }
    if (g == idx.size()) break;
  }
  std::vector<std::pair<std::pair<int, std::vector<int>>, std::size_t>> keyed;
  keyed.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    keyed.push_back({{space.q_degree(basis_[i]), space.order_key(basis_[i])}, i});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<SegreMonomial> sorted;
  sorted.reserve(basis_.size());
  for (const auto& kv : keyed) sorted.push_back(basis_[kv.second]);
  basis_ = std::move(sorted);

  max_e_ = r * space.n();
  starts_.assign(static_cast<std::size_t>(max_e_) + 2, 0);
  for (const auto& kv : keyed) ++starts_[static_cast<std::size_t>(kv.first.first) + 1];
  for (std::size_t e = 1; e < starts_.size(); ++e) starts_[e] += starts_[e - 1];
  index_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(key(basis_[i].counts), static_cast<int>(i));
}

int Piece::begin(int e) const {
  if (e < 0) return 0;
  if (e > max_e_) return size();
  return starts_[static_cast<std::size_t>(e)];
}

int Piece::end(int e) const {
  if (e < 0) return 0;
  if (e > max_e_) return size();
  return starts_[static_cast<std::size_t>(e) + 1];
}

std::uint64_t Piece::key(const std::vector<int>& counts) const {
  std::uint64_t k = 0;
  for (int c : counts) k = k * static_cast<std::uint64_t>(r_ + 1) + static_cast<std::uint64_t>(c);
  return k;
}

int Piece::index(const SegreMonomial& m) const {
  if (m.r != r_) return -1;
  for (int c : m.counts) {
    if (c < 0 || c > r_) return -1;
  }
  auto it = index_.find(key(m.counts));
  return it == index_.end() ? -1 : it->second;
}

void AlgebraElement::add(const SegreMonomial& m, const Rational& c) {
  if (m.r != r) throw std::invalid_argument("monomial has the wrong first degree");
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(m.counts, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

AlgebraElement multiply(const SegreSpace& space, const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  out.r = a.r + b.r;
  for (const auto& [ca, xa] : a.terms) {
    for (const auto& [cb, xb] : b.terms) {
      out.add(space.multiply(SegreMonomial{a.r, ca}, SegreMonomial{b.r, cb}), xa * xb);
    }
  }
  return out;
}

AlgebraElement act(const SegreSpace& space, const Permutation& perm, const AlgebraElement& a) {
  AlgebraElement out;
  out.r = a.r;
  for (const auto& [c, x] : a.terms) out.add(space.act(perm, SegreMonomial{a.r, c}), x);
  return out;
}

std::string to_string(const SegreSpace& space, const AlgebraElement& a) {
  std::vector<SegreMonomial> ms;
  for (const auto& kv : a.terms) ms.push_back(SegreMonomial{a.r, kv.first});
  std::sort(ms.begin(), ms.end(), [&](const auto& x, const auto& y) { return space.canonical_less(x, y); });
  if (ms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const Rational& c = a.terms.at(ms[i].counts);
    if (i) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const Rational ac = abs(c);
    if (ac != 1) s += pcoinv::to_string(ac) + "*";
    s += "(" + space.to_string(ms[i]) + ")";
  }
  return s;
}

std::vector<SegreGenerator> generators_of_degree(const SegreSpace& space, int l) {
  std::vector<SegreGenerator> out;
  for (const auto& g : space.generators()) {
    if (total(g) == l) out.push_back(g);
  }
  return out;
}

AlgebraElement e_tilde(const SegreSpace& space, int l) {
  if (l < 0 || l > space.n()) throw std::invalid_argument("degree out of range 0..n");
  AlgebraElement e;
  e.r = 1;
  for (const auto& g : generators_of_degree(space, l)) e.add(space.generator(g), 1);
  return e;
}

namespace {

void subsets_rec(int start, int stop, int need, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (need == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= stop - need; ++i) {
    cur.push_back(i);
    subsets_rec(i + 1, stop, need - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

AlgebraElement chi_alpha_image(const Composition& alpha, const SegreGenerator& g) {
  if (g.size() != alpha.size()) throw std::invalid_argument("generator has wrong length");
  const int n = total(alpha);
  const SegreSpace tn(ones(n));
  std::vector<std::vector<std::vector<int>>> choices;
  int start = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (g[i] < 0 || g[i] > alpha[i]) throw std::invalid_argument("generator index out of range");
    std::vector<std::vector<int>> subs;
    std::vector<int> cur;
    subsets_rec(start, start + alpha[i], g[i], cur, subs);
    choices.push_back(std::move(subs));
    start += alpha[i];
  }
  AlgebraElement out;
  out.r = 1;
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    SegreMonomial m = tn.unit(1);
    for (std::size_t b = 0; b < choices.size(); ++b) {
      for (int x : choices[b][idx[b]]) m.counts[static_cast<std::size_t>(x)] = 1;
    }
    out.add(m, 1);
    std::size_t b = 0;
    while (b < idx.size()) {
      if (++idx[b] < choices[b].size()) break;
      idx[b] = 0;
      ++b;
    }
    if (b == idx.size()) break;
  }
  return out;
}

std::vector<Permutation> young_subgroup(const Composition& alpha) {
  std::vector<Permutation> out;
  for (const Permutation& p : enumerate_permutations(total(alpha))) {
    bool ok = true;
    int start = 0;
    for (std::size_t i = 0; i < alpha.size() && ok; ++i) {
      for (int j = start; j < start + alpha[i] && ok; ++j) {
        ok = p[static_cast<std::size_t>(j)] >= start && p[static_cast<std::size_t>(j)] < start + alpha[i];
      }
      start += alpha[i];
    }
    if (ok) out.push_back(p);
  }
  return out;
}

}  // namespace pcoinv
