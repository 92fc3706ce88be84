#include "pcoinv/qseries.hpp"

#include <map>

namespace pcoinv {

QPoly q_integer(int n) {
  QPoly p;
  for (int i = 0; i < n; ++i) p.add_term(i, 1);
  return p;
}

QPoly q_factorial(int n) {
  QPoly p = 1;
  for (int i = 2; i <= n; ++i) p *= q_integer(i);
  return p;
}

QPoly q_binomial(int n, int k) {
  if (k < 0 || k > n) return QPoly();
  return exact_divide(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

QPoly q_multinomial(const Composition& alpha) {
  QPoly den = 1;
  for (int a : alpha) den *= q_factorial(a);
  return exact_divide(q_factorial(total(alpha)), den);
}

BiPoly A_alpha(const Composition& alpha) {
  BiPoly a;
  for (const Word& w : enumerate_words(alpha)) {
    const WordStats s = word_stats(w);
    a.add_term(s.des, s.maj, 1);
  }
  return a;
}

BiPoly syt_generating_function(const Partition& lambda) {
  BiPoly a;
  for (const SytEntry& e : enumerate_syt(lambda)) a.add_term(e.des, e.maj, 1);
  return a;
}

MacMahonReport macmahon_check(const Composition& alpha, int order) {
  MacMahonReport rep;
  rep.lhs = BiSeries(order);
  for (int r = 0; r <= order; ++r) {
    QPoly c = 1;
    for (int a : alpha) c *= q_binomial(r + a, a);
    rep.lhs.coeff(r) = c;
  }
  rep.rhs = inv_product_series(range_exponents(total(alpha)), order) * A_alpha(alpha);
  for (int r = 0; r <= order; ++r) {
    if (!(rep.lhs.coeff(r) == rep.rhs.coeff(r))) {
      rep.first_mismatch = r;
      break;
    }
  }
  rep.holds = rep.first_mismatch < 0;
  return rep;
}

PolytopeSpec PolytopeSpec::product_of_simplices(const Composition& alpha) {
  PolytopeSpec s;
  s.dims = alpha;
  for (int a : alpha) {
    for (int j = 1; j <= a; ++j) s.weights.push_back(j);
  }
  return s;
}

void PolytopeSpec::validate() const {
  if (!is_composition(dims)) throw std::invalid_argument("simplex dimensions must be positive");
  if (static_cast<int>(weights.size()) != total(dims)) {
    throw std::invalid_argument("weight vector length must equal the sum of simplex dimensions");
  }
}

Integer PolytopeSpec::lattice_point_count(int r) const {
  Integer c = 1;
  for (int a : dims) c *= binomial(r + a, a);
  return c;
}

namespace {

// Weighted values a . v over lattice points v of r * Delta_d (coordinates >= 0, sum <= r).
void simplex_values(int d, int r, const int* weights, std::vector<int>& out) {
  std::vector<int> v(static_cast<std::size_t>(d), 0);
  while (true) {
    int val = 0;
    for (int i = 0; i < d; ++i) val += v[static_cast<std::size_t>(i)] * weights[i];
    out.push_back(val);
    // odometer over {v : sum v <= r}
    int i = 0;
    int s = total(v);
    while (i < d) {
      if (s < r) {
        ++v[static_cast<std::size_t>(i)];
        break;
      }
      s -= v[static_cast<std::size_t>(i)];
      v[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == d) return;
  }
}

}  // namespace

QPoly q_ehrhart(const PolytopeSpec& spec, int r, long budget) {
  spec.validate();
  if (r < 0) throw std::invalid_argument("dilation must be nonnegative");
  if (spec.lattice_point_count(r) > budget) {
    throw BudgetExceeded("lattice point count " + to_string(spec.lattice_point_count(r)) +
                         " exceeds enumeration budget " + std::to_string(budget));
  }
  std::vector<std::vector<int>> blocks;
  std::size_t offset = 0;
  for (int d : spec.dims) {
    std::vector<int> vals;
    simplex_values(d, r, spec.weights.data() + offset, vals);
    blocks.push_back(std::move(vals));
    offset += static_cast<std::size_t>(d);
  }
  // Enumerate the product point by point.
  std::map<int, long> counts;
  std::vector<std::size_t> idx(blocks.size(), 0);
  while (true) {
    int val = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) val += blocks[b][idx[b]];
    ++counts[val];
    std::size_t b = 0;
    while (b < blocks.size()) {
      if (++idx[b] < blocks[b].size()) break;
      idx[b] = 0;
      ++b;
    }
    if (b == blocks.size()) break;
  }
  QPoly p;
  for (const auto& [e, c] : counts) p.add_term(e, Rational(c));
  return p;
}

BiSeries segre_hilbert(const Composition& alpha, int order, SegreMethod method, long budget) {
  if (method == SegreMethod::closed_form) {
    return inv_product_series(range_exponents(total(alpha)), order) * A_alpha(alpha);
  }
  const PolytopeSpec spec = PolytopeSpec::product_of_simplices(alpha);
  BiSeries s(order);
  for (int r = 0; r <= order; ++r) s.coeff(r) = q_ehrhart(spec, r, budget);
  return s;
}

}  // namespace pcoinv
