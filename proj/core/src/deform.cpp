#include "pcoinv/deform.hpp"

#include <algorithm>
#include <stdexcept>

#include "pcoinv/cyclotomic.hpp"
#include "pcoinv/matrix.hpp"
#include "pcoinv/segre.hpp"

namespace pcoinv {

std::string deform_variable_name(const Composition& alpha, int group, int j) {
  const bool all_ones = std::all_of(alpha.begin(), alpha.end(), [](int a) { return a == 1; });
  if (all_ones) return "u" + std::to_string(group + 1);
  static const std::string letters = "uvwxyzabcdefghijklmnopqr";
  if (group >= static_cast<int>(letters.size())) return "g" + std::to_string(group + 1) + "_" + std::to_string(j);
  return std::string(1, letters[static_cast<std::size_t>(group)]) + std::to_string(j);
}

int Presentation::var(int group, int j) const {
  int idx = 0;
  for (int i = 0; i < group; ++i) idx += alpha[static_cast<std::size_t>(i)];
  return idx + j - 1;
}

int Presentation::s_var() const {
  if (!symbolic_s) throw std::logic_error("presentation has no symbolic s");
  return ring->nvars() - 1;
}

namespace {

Presentation build_presentation(const Composition& alpha, bool symbolic, const Rational& s) {
  if (!is_composition(alpha)) throw std::invalid_argument("alpha must be a composition");
  Presentation p;
  p.alpha = alpha;
  p.symbolic_s = symbolic;
  p.s_value = s;
  const int n = total(alpha);
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (int j = 1; j <= alpha[i]; ++j) {
      names.push_back(deform_variable_name(alpha, static_cast<int>(i), j));
      degrees.push_back(j);
    }
  }
  if (symbolic) {
    names.emplace_back("s");
    degrees.push_back(n);
  }
  p.ring = make_ring(std::move(names), std::move(degrees));
  MPoly prod = MPoly::constant(p.ring, 1);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    MPoly factor = MPoly::constant(p.ring, 1);
    for (int j = 1; j <= alpha[i]; ++j) factor += MPoly::variable(p.ring, p.var(static_cast<int>(i), j));
    prod = prod * factor;
  }
  for (int d = 1; d <= n; ++d) {
    MPoly g = prod.homogeneous_part(d);
    if (d == n) {
      if (symbolic) g -= MPoly::variable(p.ring, p.s_var());
      else g -= MPoly::constant(p.ring, s);
    }
    p.generators.push_back(std::move(g));
  }
  return p;
}

long to_long(const Rational& c) {
  if (!is_integral(c) || !mpz_fits_slong_p(c.get_num_mpz_t())) {
    throw std::domain_error("relation coefficient is not a machine integer");
  }
  return c.get_num().get_si();
}

}  // namespace

Presentation presentation_R(const Composition& alpha, const Rational& s) { return build_presentation(alpha, false, s); }

Presentation presentation_R_symbolic(const Composition& alpha) { return build_presentation(alpha, true, 0); }

MPoly Elimination::reduce(const MPoly& p) const {
  MPoly cur = p;
  for (const auto& [v, value] : substitutions) cur = cur.substitute(v, value);
  std::vector<int> keep = kept;
  if (reduced_ring->nvars() > static_cast<int>(kept.size())) keep.push_back(ring->nvars() - 1);  // s
  MPoly out(reduced_ring);
  for (const auto& [k, c] : cur.terms()) {
    Exponent e;
    for (int v : keep) e.push_back(k.second[static_cast<std::size_t>(v)]);
    out.add_term(e, c);
  }
  return out;
}

Elimination eliminate(const Presentation& p) {
  Elimination el;
  el.ring = p.ring;
  const int max_a = *std::max_element(p.alpha.begin(), p.alpha.end());
  std::vector<MPoly> gens = p.generators;
  std::vector<bool> gone(static_cast<std::size_t>(p.ring->nvars()), false);
  for (int d = 1; d <= max_a; ++d) {
    int group = -1;
    for (int i = 0; i < static_cast<int>(p.alpha.size()); ++i) {
      if (p.alpha[static_cast<std::size_t>(i)] >= d) group = i;
    }
    const int v = p.var(group, d);
    MPoly& g = gens[static_cast<std::size_t>(d - 1)];
    Exponent ev(static_cast<std::size_t>(p.ring->nvars()), 0);
    ev[static_cast<std::size_t>(v)] = 1;
    if (g.coeff(ev) != 1) throw std::logic_error("eliminated variable does not appear with coefficient 1");
    const MPoly value = MPoly::variable(p.ring, v) - g;
    if (value.uses(v)) throw std::logic_error("eliminated variable is not linear in its generator");
    for (std::size_t j = static_cast<std::size_t>(d); j < gens.size(); ++j) gens[j] = gens[j].substitute(v, value);
    el.substitutions.emplace_back(v, value);
    gone[static_cast<std::size_t>(v)] = true;
  }
  std::vector<std::string> names;
  std::vector<int> degrees;
  const int base_vars = p.ring->nvars() - (p.symbolic_s ? 1 : 0);
  for (int v = 0; v < base_vars; ++v) {
    if (gone[static_cast<std::size_t>(v)]) continue;
    el.kept.push_back(v);
    names.push_back(p.ring->names[static_cast<std::size_t>(v)]);
    degrees.push_back(p.ring->degrees[static_cast<std::size_t>(v)]);
  }
  if (p.symbolic_s) {
    names.emplace_back("s");
    degrees.push_back(p.ring->degrees.back());
  }
  el.reduced_ring = make_ring(std::move(names), std::move(degrees));
  for (std::size_t j = static_cast<std::size_t>(max_a); j < gens.size(); ++j) {
    MPoly r = el.reduce(gens[j]);
    if (r.is_zero()) continue;
    if (r.leading_coeff() < 0) r = -r;
    el.relations.push_back(std::move(r));
  }
  return el;
}

GradedQuotient::GradedQuotient(RingPtr ring, std::vector<MPoly> relations, SpanOptions options)
    : ring_(std::move(ring)), relations_(std::move(relations)), options_(options) {
  for (const auto& g : relations_) {
    if (!g.is_homogeneous()) throw std::invalid_argument("graded quotient needs homogeneous relations");
  }
}

const std::vector<Exponent>& GradedQuotient::monomials(int d) {
  auto it = monomials_.find(d);
  if (it == monomials_.end()) {
    it = monomials_.emplace(d, monomials_of_degree(*ring_, d)).first;
    auto& idx = index_[d];
    for (std::size_t i = 0; i < it->second.size(); ++i) idx.emplace(it->second[i], static_cast<int>(i));
  }
  return it->second;
}

SparseIntMatrix GradedQuotient::ideal_matrix(int d) {
  const auto& cols = monomials(d);
  SparseIntMatrix m(static_cast<int>(cols.size()));
  const auto& idx = index_.at(d);
  for (const auto& g : relations_) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& mono : monomials(d - g.degree())) {
      std::vector<std::pair<int, long>> row;
      for (const auto& [k, c] : g.terms()) {
        Exponent e = k.second;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += mono[i];
        row.emplace_back(idx.at(e), to_long(c));
      }
      m.add_row(std::move(row));
    }
  }
  return m;
}

const SpanComplement& GradedQuotient::complement(int d) {
  auto it = complements_.find(d);
  if (it == complements_.end()) it = complements_.emplace(d, span_complement(ideal_matrix(d), options_)).first;
  return it->second;
}

int GradedQuotient::dim(int d) { return complement(d).quotient_dim(); }

std::vector<Rational> GradedQuotient::coords(const MPoly& p, int d) {
  const SpanComplement& sc = complement(d);
  const auto& idx = index_.at(d);
  std::vector<std::pair<int, Rational>> v;
  for (const auto& [k, c] : p.terms()) {
    if (k.first != d) continue;
    v.emplace_back(idx.at(k.second), c);
  }
  return sc.quotient_coords(v);
}

std::vector<Exponent> GradedQuotient::standard_monomials(int d) {
  const auto& cols = monomials(d);
  std::vector<Exponent> out;
  for (int f : complement(d).free_cols) out.push_back(cols[static_cast<std::size_t>(f)]);
  return out;
}

MPoly GradedQuotient::normal_form(const MPoly& p) {
  MPoly out(ring_);
  std::vector<int> degrees;
  for (const auto& kv : p.terms()) {
    if (degrees.empty() || degrees.back() != kv.first.first) degrees.push_back(kv.first.first);
  }
  for (int d : degrees) {
    const auto c = coords(p, d);
    const auto std_monos = standard_monomials(d);
    for (std::size_t i = 0; i < c.size(); ++i) out.add_term(std_monos[i], c[i]);
  }
  return out;
}

GradedQuotient::Series GradedQuotient::hilbert(int cap) {
  Series s;
  const int window = std::max(1, ring_->max_degree());
  int zero_run = 0;
  for (int d = 0;; ++d) {
    const int dm = dim(d);
    s.degrees_checked = d + 1;
    if (dm == 0) {
      if (++zero_run >= window) {
        s.ok = true;
        return s;
      }
      continue;
    }
    zero_run = 0;
    if (d > cap) {
      s.message = "nonzero quotient in degree " + std::to_string(d) + " beyond the cap " + std::to_string(cap);
      return s;
    }
    s.series.add_term(d, dm);
  }
}

namespace {

HilbertRResult run_hilbert(GradedQuotient& gq, int n) {
  const auto s = gq.hilbert(n * (n - 1) / 2);
  return HilbertRResult{s.series, s.ok, s.message};
}

}  // namespace

HilbertRResult hilbert_R(const Composition& alpha) {
  const Elimination el = eliminate(presentation_R(alpha));
  GradedQuotient gq(el.reduced_ring, el.relations);
  return run_hilbert(gq, total(alpha));
}

HilbertRResult hilbert_R_full(const Composition& alpha) {
  const Presentation p = presentation_R(alpha);
  GradedQuotient gq(p.ring, p.generators);
  return run_hilbert(gq, total(alpha));
}

Exponent garsia_stanton_exponent(const Word& sigma) {
  Exponent e(sigma.size(), 0);
  for (int i : word_stats(sigma).descents) {
    for (int j = 0; j < i; ++j) ++e[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)] - 1)];
  }
  return e;
}

FibreReport semisimple_fibre_check(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  FibreReport rep;
  rep.n = n;
  rep.s1 = n % 2 == 1 ? 1 : -1;
  rep.note =
      "the orbit of (1, eta, ..., eta^(n-1)) has e_n = (-1)^(n+1); the fibre is checked at s1 = (-1)^(n+1), "
      "which differs from prod v_i = 1 when n is even and is equivalent to it under the torus action";
  const FieldPtr field = CyclotomicField::make(n);
  const auto perms = enumerate_permutations(n);
  rep.points = static_cast<int>(perms.size());

  // e_1..e_n of each point: coefficients of prod_i (1 + x_i T).
  rep.relations_ok = true;
  for (const Permutation& tau : perms) {
    std::vector<CycloElem> e(static_cast<std::size_t>(n) + 1, field->zero());
    e[0] = field->one();
    for (int i = 0; i < n; ++i) {
      const CycloElem x = field->root_power(tau[static_cast<std::size_t>(i)]);
      for (int k = i + 1; k >= 1; --k) e[static_cast<std::size_t>(k)] += e[static_cast<std::size_t>(k - 1)] * x;
    }
    bool ok = e[static_cast<std::size_t>(n)] == field->from_rational(rep.s1);
    for (int k = 1; k < n && ok; ++k) ok = e[static_cast<std::size_t>(k)].is_zero();
    if (!ok) {
      rep.relations_ok = false;
      rep.witness = "relation failure at point eta^(" + join(tau) + ")";
      break;
    }
  }

  // Distinct points: coordinates compared in the field.
  std::vector<std::vector<CycloElem>> coords;
  for (const Permutation& tau : perms) {
    std::vector<CycloElem> c;
    for (int x : tau) c.push_back(field->root_power(x));
    coords.push_back(std::move(c));
  }
  rep.distinct_ok = true;
  for (std::size_t a = 0; a < coords.size() && rep.distinct_ok; ++a) {
    for (std::size_t b = a + 1; b < coords.size(); ++b) {
      if (coords[a] == coords[b]) {
        rep.distinct_ok = false;
        if (rep.witness.empty()) rep.witness = "coincident points " + join(perms[a]) + " and " + join(perms[b]);
        break;
      }
    }
  }

  // Evaluation matrix: b_sigma(p_tau) = eta^(sum_i e_i * tau(i)).
  ExactMatrix<CycloElem> m(rep.points, rep.points, field->zero());
  for (std::size_t s = 0; s < perms.size(); ++s) {
    const Exponent ex = garsia_stanton_exponent(permutation_word(perms[s]));
    for (std::size_t t = 0; t < perms.size(); ++t) {
      long power = 0;
      for (std::size_t i = 0; i < ex.size(); ++i) power += static_cast<long>(ex[i]) * perms[t][i];
      m(static_cast<int>(s), static_cast<int>(t)) = field->root_power(power);
    }
  }
  rep.rank = rank(std::move(m));
  if (rep.rank != rep.points && rep.witness.empty()) {
    rep.witness = "evaluation rank " + std::to_string(rep.rank) + " < " + std::to_string(rep.points);
  }
  rep.ok = rep.relations_ok && rep.distinct_ok && rep.rank == rep.points;
  return rep;
}

FibreIsoReport fibre_isomorphism_check(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  FibreIsoReport rep;
  rep.n = n;
  rep.ok = true;
  const SegreSpace tn(ones(n));
  auto x = [&](unsigned mask) {
    SegreMonomial m = tn.unit(1);
    for (int i = 0; i < n; ++i) m.counts[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
    return m;
  };
  const SegreMonomial x_empty = x(0);
  auto x_empty_pow = [&](int k) {
    SegreMonomial m = tn.unit(0);
    for (int i = 0; i < k; ++i) m = tn.multiply(m, x_empty);
    return m;
  };

  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    ++rep.subsets;
    const int k = __builtin_popcount(mask);
    if (k == 0) continue;
    // Relation chain x_empty * x_{J u {i}} = x_{{i}} * x_J.
    SegreMonomial product = tn.unit(0);
    unsigned j_mask = 0;
    for (int i = 0; i < n; ++i) {
      if (!((mask >> i) & 1U)) continue;
      const unsigned next = j_mask | (1U << i);
      if (j_mask != 0) {
        ++rep.relation_steps;
        if (!(tn.multiply(x_empty, x(next)) == tn.multiply(x(1U << i), x(j_mask)))) {
          rep.ok = false;
          if (rep.witness.empty()) rep.witness = "relation step fails for subset mask " + std::to_string(next);
        }
      }
      product = tn.multiply(product, x(1U << i));
      j_mask = next;
    }
    if (!(product == tn.multiply(x(mask), x_empty_pow(k - 1)))) {
      rep.ok = false;
      if (rep.witness.empty()) rep.witness = "product of singletons differs from x_I for mask " + std::to_string(mask);
    }
  }

  for (int k = 1; k <= n; ++k) {
    ++rep.elementary_checked;
    AlgebraElement lhs;
    lhs.r = k;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      if (__builtin_popcount(mask) != k) continue;
      SegreMonomial prod = tn.unit(0);
      for (int i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) prod = tn.multiply(prod, x(1U << i));
      }
      lhs.add(prod, 1);
    }
    AlgebraElement pad;
    pad.r = k - 1;
    pad.add(x_empty_pow(k - 1), 1);
    const AlgebraElement rhs = multiply(tn, e_tilde(tn, k), pad);
    if (!(lhs == rhs)) {
      rep.ok = false;
      if (rep.witness.empty()) rep.witness = "psi(e_" + std::to_string(k) + ") differs from e~_" + std::to_string(k);
    }
  }
  return rep;
}

}  // namespace pcoinv
