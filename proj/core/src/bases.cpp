#include "pcoinv/bases.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "pcoinv/matrix.hpp"
#include "pcoinv/qseries.hpp"
#include "pcoinv/quotient.hpp"

namespace pcoinv {

std::string DescentMonomial::factors_string() const {
  if (factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "*";
    s += "y[" + join(factors[i]) + "]";
  }
  return s;
}

DescentMonomial a_monomial(const Composition& alpha, const Word& w) {
  if (!is_word_of(w, alpha)) throw std::invalid_argument("word is not in W_alpha");
  const SegreSpace space(alpha);
  DescentMonomial dm;
  dm.word = w;
  dm.path = word_to_path(w, space.k());
  dm.descent_points = path_descent_points(dm.path);
  const WordStats st = word_stats(w);
  dm.des = st.des;
  dm.maj = st.maj;
  dm.monomial = space.unit(0);
  for (const Point& p : dm.descent_points) {
    dm.factors.push_back(p);
    dm.monomial = space.multiply_generator(p, dm.monomial);
  }
  return dm;
}

MPoly b_polynomial(const Presentation& p, const Word& w) {
  if (!is_word_of(w, p.alpha)) throw std::invalid_argument("word is not in W_alpha");
  const LatticePath path = word_to_path(w, static_cast<int>(p.alpha.size()));
  Exponent e(static_cast<std::size_t>(p.ring->nvars()), 0);
  for (const Point& pt : path_descent_points(path)) {
    for (std::size_t j = 0; j < pt.size(); ++j) {
      if (pt[j] > 0) ++e[static_cast<std::size_t>(p.var(static_cast<int>(j), pt[j]))];
    }
  }
  return MPoly::monomial(p.ring, e);
}

MPoly b_polynomial(const Composition& alpha, const Word& w) { return b_polynomial(presentation_R(alpha), w); }

namespace {

int coordinate_rank(const std::vector<std::vector<Rational>>& rows, int width) {
  if (rows.empty() || width == 0) return 0;
  ExactMatrix<Rational> m(static_cast<int>(rows.size()), width, Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < width; ++j) m(static_cast<int>(i), j) = rows[i][static_cast<std::size_t>(j)];
  }
  return rank(std::move(m));
}

void finish(BasisReport& rep) {
  rep.ok = true;
  for (const auto& c : rep.checks) {
    if (c.ok) continue;
    rep.ok = false;
    if (rep.witness.empty()) {
      rep.witness = "degree (" + std::to_string(c.r) + "," + std::to_string(c.e) + "): count " + std::to_string(c.count) +
                    ", dim " + std::to_string(c.dim) + ", rank " + std::to_string(c.rank);
    }
  }
}

}  // namespace

BasisReport verify_a_basis(const Composition& alpha) {
  QuotientAlgebra qa(alpha);
  const HilbertResult h = qa.hilbert();
  std::map<std::pair<int, int>, std::vector<SegreMonomial>> by_degree;
  for (const Word& w : enumerate_words(alpha)) {
    const DescentMonomial dm = a_monomial(alpha, w);
    by_degree[{dm.des, dm.maj}].push_back(dm.monomial);
  }
  std::set<std::pair<int, int>> degrees;
  for (const auto& kv : by_degree) degrees.insert(kv.first);
  for (const auto& kv : h.series.terms()) degrees.insert(kv.first);

  BasisReport rep;
  for (const auto& [r, e] : degrees) {
    BasisCheck c;
    c.r = r;
    c.e = e;
    const auto& monos = by_degree[{r, e}];
    c.count = static_cast<int>(monos.size());
    c.dim = qa.quotient_dim(r, e);
    std::vector<std::vector<Rational>> rows;
    for (const auto& m : monos) {
      if (qa.space().q_degree(m) != e || m.r != r) throw std::logic_error("descent monomial has the wrong bidegree");
      rows.push_back(qa.quotient_coords(m));
    }
    c.rank = coordinate_rank(rows, c.dim);
    c.ok = c.count == c.dim && c.rank == c.count;
    rep.checks.push_back(c);
  }
  finish(rep);
  if (!h.ok) {
    rep.ok = false;
    rep.witness = h.message;
  }
  return rep;
}

BasisReport verify_b_basis(const Composition& alpha) {
  const Presentation p = presentation_R(alpha);
  const Elimination el = eliminate(p);
  GradedQuotient gq(el.reduced_ring, el.relations);
  const QPoly target = q_multinomial(alpha);
  std::map<int, std::vector<MPoly>> by_degree;
  for (const Word& w : enumerate_words(alpha)) by_degree[word_stats(w).maj].push_back(el.reduce(b_polynomial(p, w)));
  std::set<int> degrees;
  for (const auto& kv : by_degree) degrees.insert(kv.first);
  for (const auto& kv : target.terms()) degrees.insert(kv.first);

  BasisReport rep;
  for (int e : degrees) {
    BasisCheck c;
    c.e = e;
    const auto& polys = by_degree[e];
    c.count = static_cast<int>(polys.size());
    c.dim = gq.dim(e);
    std::vector<std::vector<Rational>> rows;
    for (const auto& b : polys) {
      if (!b.is_zero() && (!b.is_homogeneous() || b.degree() != e)) throw std::logic_error("b_w has the wrong degree");
      rows.push_back(gq.coords(b, e));
    }
    c.rank = coordinate_rank(rows, c.dim);
    c.ok = c.count == c.dim && c.rank == c.count && Rational(c.count) == target.coeff(e);
    rep.checks.push_back(c);
  }
  finish(rep);
  return rep;
}

std::vector<DeformedBasisEntry> deformed_basis(const Composition& alpha) {
  const Presentation p = presentation_R(alpha);
  const Elimination el = eliminate(p);
  GradedQuotient gq(el.reduced_ring, el.relations);
  std::vector<DeformedBasisEntry> out;
  for (const Word& w : enumerate_words(alpha)) {
    DeformedBasisEntry d;
    d.word = w;
    d.maj = word_stats(w).maj;
    d.b = b_polynomial(p, w);
    d.reduced = el.reduce(d.b);
    d.normal_form = gq.normal_form(d.reduced);
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace pcoinv
