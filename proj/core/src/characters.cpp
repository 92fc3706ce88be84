#include "pcoinv/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "pcoinv/qseries.hpp"
#include "pcoinv/quotient.hpp"

namespace pcoinv {

namespace {

// Beta-set form of lambda: lambda_i + (l - i), strictly decreasing.
std::vector<int> beta_numbers(const Partition& lambda) {
  const int l = static_cast<int>(lambda.size());
  std::vector<int> b;
  for (int i = 0; i < l; ++i) b.push_back(lambda[static_cast<std::size_t>(i)] + (l - 1 - i));
  return b;
}

Integer mn_rec(std::vector<int> beta, const Partition& mu, std::size_t pos) {
  if (pos == mu.size()) return 1;
  const int h = mu[pos];
  const std::set<int> present(beta.begin(), beta.end());
  Integer sum = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int nb = b - h;
    if (nb < 0 || present.count(nb)) continue;
    int between = 0;
    for (int x : beta) {
      if (x > nb && x < b) ++between;
    }
    std::vector<int> next = beta;
    next[i] = nb;
    std::sort(next.rbegin(), next.rend());
    const Integer v = mn_rec(std::move(next), mu, pos + 1);
    if (between % 2) sum -= v;
    else sum += v;
  }
  return sum;
}

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& mu) {
  if (total(lambda) != total(mu)) throw std::invalid_argument("character arguments must have equal size");
  return mn_rec(beta_numbers(lambda), mu, 0);
}

int CharacterTable::index(const Partition& p) const {
  auto it = std::find(partitions.begin(), partitions.end(), p);
  if (it == partitions.end()) throw std::invalid_argument("partition not of size n");
  return static_cast<int>(it - partitions.begin());
}

const Integer& CharacterTable::value(const Partition& lambda, const Partition& mu) const {
  return chi[static_cast<std::size_t>(index(lambda))][static_cast<std::size_t>(index(mu))];
}

bool CharacterTable::is_orthogonal() const {
  for (std::size_t a = 0; a < partitions.size(); ++a) {
    for (std::size_t b = 0; b < partitions.size(); ++b) {
      Rational s = 0;
      for (std::size_t m = 0; m < partitions.size(); ++m) s += Rational(chi[a][m] * chi[b][m]) / Rational(z[m]);
      if (s != (a == b ? 1 : 0)) return false;
    }
  }
  return true;
}

CharacterTable character_table(int n) {
  static std::mutex mu;
  static std::map<int, CharacterTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  CharacterTable t;
  t.n = n;
  t.partitions = enumerate_partitions(n);
  for (const auto& m : t.partitions) {
    t.z.push_back(centralizer_order(m));
    t.class_size.push_back(factorial(n) / t.z.back());
  }
  for (const auto& l : t.partitions) {
    std::vector<Integer> row;
    for (const auto& m : t.partitions) row.push_back(mn_character(l, m));
    t.chi.push_back(std::move(row));
  }
  cache.emplace(n, t);
  return t;
}

QPoly principal_spec(const Partition& lambda, const QPoly& f) {
  const CharacterTable& t = character_table(total(lambda));
  const int li = t.index(lambda);
  QPoly out;
  for (std::size_t m = 0; m < t.partitions.size(); ++m) {
    const Integer& c = t.chi[static_cast<std::size_t>(li)][m];
    if (c == 0) continue;
    QPoly term = 1;
    for (int part : t.partitions[m]) term *= f.substitute_power(part);
    out += term * QPoly(Rational(c) / Rational(t.z[m]));
  }
  return out;
}

const char* to_string(SymBasis b) {
  switch (b) {
    case SymBasis::schur: return "s";
    case SymBasis::complete: return "h";
    case SymBasis::monomial: return "m";
    case SymBasis::powersum: return "p";
  }
  return "?";
}

void SymFunc::add(const Partition& lambda, const BiPoly& c) {
  if (total(lambda) != n) throw std::invalid_argument("partition size differs from n");
  BiPoly& slot = coeffs[lambda];
  slot += c;
  if (slot.is_zero()) coeffs.erase(lambda);
}

BiPoly SymFunc::coeff(const Partition& lambda) const {
  auto it = coeffs.find(lambda);
  return it == coeffs.end() ? BiPoly() : it->second;
}

SymFunc SymFunc::map(const std::function<BiPoly(const BiPoly&)>& f) const {
  SymFunc out;
  out.basis = basis;
  out.n = n;
  for (const auto& [l, c] : coeffs) out.add(l, f(c));
  return out;
}

std::string SymFunc::to_string() const {
  if (coeffs.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [lambda, c] : coeffs) {
    const std::string fn = std::string(pcoinv::to_string(basis)) + "[" + join(lambda) + "]";
    std::string body;
    bool negative = false;
    if (c.terms().size() == 1) {
      std::string cs = c.to_string();
      if (cs[0] == '-') {
        negative = true;
        cs = cs.substr(1);
      }
      body = cs == "1" ? fn : cs + "*" + fn;
    } else {
      body = "(" + c.to_string() + ")*" + fn;
    }
    if (first) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    s += body;
    first = false;
  }
  return s;
}

namespace {

BiPoly truncate_t(const BiPoly& p, int max_t) {
  BiPoly out;
  for (const auto& [key, c] : p.terms()) {
    if (key.first <= max_t) out.add_term(key.first, key.second, c);
  }
  return out;
}

bool integral(const BiPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& kv) { return is_integral(kv.second); });
}

// prod_{j=0}^{n} (1 - t q^j) * sum_{r<=top+1} t^r sum_mu principal_spec(mu, f_r) s_mu,
// truncated at t^top after checking that t^{top+1} vanishes.
CharResult koszul_sum(int size, int n, int top, const std::function<QPoly(int)>& alphabet) {
  CharResult res;
  res.value.n = size;
  const BiPoly denom = product_one_minus_tq(range_exponents(n));
  const auto parts = enumerate_partitions(size);
  std::vector<QPoly> alph;
  for (int r = 0; r <= top + 1; ++r) alph.push_back(alphabet(r));
  for (const auto& mu : parts) {
    BiPoly series;
    for (int r = 0; r <= top + 1; ++r) series += BiPoly::from_q(principal_spec(mu, alph[static_cast<std::size_t>(r)]), r);
    const BiPoly prod = denom * series;
    if (!prod.t_coeff(top + 1).is_zero()) {
      res.ok = false;
      res.message = "nonzero coefficient of t^" + std::to_string(top + 1) + " at s[" + join(mu) + "]";
    }
    const BiPoly c = truncate_t(prod, top);
    if (!integral(c)) {
      res.ok = false;
      res.message = "non-integral coefficient at s[" + join(mu) + "]";
    }
    res.value.add(mu, c);
  }
  return res;
}

// Decomposes a class function given by traces into Schur coefficients.
CharResult decompose_traces(int size, const std::vector<std::pair<int, int>>& bidegrees,
                            const std::function<Rational(const Partition&, int, int)>& trace) {
  CharResult res;
  res.value.n = size;
  const CharacterTable t = character_table(size);
  for (const auto& [r, e] : bidegrees) {
    std::vector<Rational> tr;
    for (const auto& mu : t.partitions) tr.push_back(trace(mu, r, e));
    for (std::size_t l = 0; l < t.partitions.size(); ++l) {
      Rational mult = 0;
      for (std::size_t m = 0; m < t.partitions.size(); ++m) mult += Rational(t.chi[l][m]) * tr[m] / Rational(t.z[m]);
      if (!is_integral(mult) || mult < 0) {
        res.ok = false;
        res.message = "non-integral multiplicity at bidegree (" + std::to_string(r) + "," + std::to_string(e) + ")";
      }
      if (mult != 0) res.value.add(t.partitions[l], BiPoly::monomial(r, e, mult));
    }
  }
  return res;
}

std::vector<std::pair<int, int>> support(const BiPoly& p) {
  std::vector<std::pair<int, int>> out;
  for (const auto& kv : p.terms()) out.push_back(kv.first);
  return out;
}

}  // namespace

CharResult char_P(int n, CharMethod method) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  switch (method) {
    case CharMethod::syt: {
      CharResult res;
      res.value.n = n;
      for (const auto& l : enumerate_partitions(n)) res.value.add(l, syt_generating_function(l));
      return res;
    }
    case CharMethod::koszul:
      return koszul_sum(n, n, n - 1, [](int r) { return q_integer(r + 1); });
    case CharMethod::trace: {
      ClassTraceTable table(n);
      const HilbertResult h = table.algebra().hilbert();
      CharResult res = decompose_traces(n, support(h.series), [&](const Partition& mu, int r, int e) {
        return table.trace(mu, r, e);
      });
      if (!h.ok) {
        res.ok = false;
        res.message = h.message;
      }
      return res;
    }
  }
  throw std::invalid_argument("unknown method");
}

CharResult residual_char(int k, int m, ResidualMethod method) {
  if (k < 1 || m < 1) throw std::invalid_argument("k and m must be positive");
  const Composition alpha = rectangle(m, k);
  const int n = k * m;
  if (method == ResidualMethod::plethysm) {
    const int top = A_alpha(alpha).t_degree();
    return koszul_sum(k, n, top, [m](int i) { return q_binomial(i + m, m); });
  }
  QuotientAlgebra qa(alpha);
  const HilbertResult h = qa.hilbert();
  CharResult res = decompose_traces(k, support(h.series), [&](const Partition& mu, int r, int e) {
    return qa.trace(permutation_of_cycle_type(mu), r, e);
  });
  if (!h.ok) {
    res.ok = false;
    res.message = h.message;
  }
  return res;
}

Integer symfunc_dimension(const SymFunc& f) {
  Rational d = 0;
  for (const auto& [l, c] : f.coeffs) d += c.at_one() * Rational(syt_count(l));
  return d.get_num();
}

QPoly ambient_trace_formula(const Partition& mu, int r) {
  QPoly p = 1;
  for (int c : mu) p *= q_integer(r + 1).substitute_power(c);
  return p;
}

InvariantsReport invariants_free_check(int n, int r_max) {
  InvariantsReport rep;
  const CharacterTable t = character_table(n);
  const BiSeries monos = inv_product_series(range_exponents(n), r_max);
  for (int r = 0; r <= r_max; ++r) {
    QPoly inv;
    for (std::size_t m = 0; m < t.partitions.size(); ++m) {
      inv += ambient_trace_formula(t.partitions[m], r) * QPoly(Rational(1) / Rational(t.z[m]));
    }
    for (int e = 0; e <= r * n; ++e) {
      InvariantCell cell;
      cell.r = r;
      cell.e = e;
      const Rational d = inv.coeff(e);
      const Rational c = monos.coeff(r).coeff(e);
      cell.invariant_dim = d.get_num();
      cell.monomial_count = c.get_num();
      if (!is_integral(d) || d != c) rep.ok = false;
      rep.cells.push_back(std::move(cell));
    }
  }
  return rep;
}

}  // namespace pcoinv
