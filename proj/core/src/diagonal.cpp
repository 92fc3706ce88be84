#include "pcoinv/diagonal.hpp"

#include <map>
#include <stdexcept>

#include "pcoinv/combinat.hpp"
#include "pcoinv/matrix.hpp"

namespace pcoinv {

RingPtr diagonal_ring(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("b" + std::to_string(i));
  return make_ring(std::move(names), std::vector<int>(static_cast<std::size_t>(2 * n), 1));
}

std::pair<int, int> bidegree(int n, const Exponent& e) {
  int a = 0, b = 0;
  for (int i = 0; i < n; ++i) {
    a += e[static_cast<std::size_t>(i)];
    b += e[static_cast<std::size_t>(n + i)];
  }
  return {a, b};
}

std::vector<DiagonalGenerator> diagonal_invariant_generators(int n) {
  const RingPtr ring = diagonal_ring(n);
  std::vector<DiagonalGenerator> out;
  for (int d = 1; d <= n; ++d) {
    for (int r = d; r >= 0; --r) {
      DiagonalGenerator g{r, d - r, MPoly(ring)};
      for (int i = 0; i < n; ++i) {
        Exponent e(static_cast<std::size_t>(2 * n), 0);
        e[static_cast<std::size_t>(i)] = r;
        e[static_cast<std::size_t>(n + i)] = d - r;
        g.poly.add_term(e, 1);
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

namespace {

// Exponents of bidegree (da, db) over diagonal_ring(n).
std::vector<Exponent> bihomogeneous_monomials(int n, int da, int db) {
  std::vector<Exponent> out;
  if (da < 0 || db < 0) return out;
  PolyRing half{std::vector<std::string>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n), 1)};
  const auto as = monomials_of_degree(half, da);
  const auto bs = monomials_of_degree(half, db);
  for (const auto& a : as) {
    for (const auto& b : bs) {
      Exponent e = a;
      e.insert(e.end(), b.begin(), b.end());
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace

MembershipResult membership(const MPoly& target, int n) {
  MembershipResult res;
  if (target.is_zero()) {
    res.member = true;
    res.certificate_verified = true;
    return res;
  }
  const auto [da, db] = bidegree(n, target.terms().begin()->first.second);
  for (const auto& kv : target.terms()) {
    if (bidegree(n, kv.first.second) != std::make_pair(da, db)) throw std::invalid_argument("target is not bihomogeneous");
  }
  const auto cols = bihomogeneous_monomials(n, da, db);
  std::map<Exponent, int> col_index;
  for (std::size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], static_cast<int>(i));

  const auto gens = diagonal_invariant_generators(n);
  std::vector<CertificateTerm> row_meta;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (const auto& m : bihomogeneous_monomials(n, da - gens[g].r, db - gens[g].s)) {
      std::vector<Rational> row(cols.size());
      for (const auto& [k, c] : gens[g].poly.terms()) {
        Exponent e = k.second;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += m[i];
        row[static_cast<std::size_t>(col_index.at(e))] += c;
      }
      rows.push_back(std::move(row));
      row_meta.push_back(CertificateTerm{static_cast<int>(g), m, 0});
    }
  }
  if (rows.empty()) return res;
  ExactMatrix<Rational> mat(static_cast<int>(rows.size()), static_cast<int>(cols.size()), Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) mat(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  }
  std::vector<Rational> tv(cols.size());
  for (const auto& [k, c] : target.terms()) tv[static_cast<std::size_t>(col_index.at(k.second))] = c;
  const auto sol = solve_row_combination(mat, tv);
  if (!sol) return res;
  res.member = true;
  MPoly check(target.ring());
  for (std::size_t i = 0; i < sol->size(); ++i) {
    if ((*sol)[i] == 0) continue;
    CertificateTerm t = row_meta[i];
    t.coeff = (*sol)[i];
    check += gens[static_cast<std::size_t>(t.generator)].poly * MPoly::monomial(target.ring(), t.multiplier, t.coeff);
    res.certificate.push_back(std::move(t));
  }
  res.certificate_verified = check == target;
  return res;
}

MPoly phi_product(int n, unsigned mask) {
  Exponent e(static_cast<std::size_t>(2 * n), 0);
  for (int i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) e[static_cast<std::size_t>(i)] = 1;
    else e[static_cast<std::size_t>(n + i)] = 1;
  }
  return MPoly::monomial(diagonal_ring(n), e);
}

PhiTrivialReport phi_trivial_check(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  PhiTrivialReport rep;
  rep.n = n;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    ++rep.subsets;
    const MPoly target = phi_product(n, mask);
    const MembershipResult m = membership(target, n);
    if (!m.member || !m.certificate_verified) rep.failures.push_back(target.to_string());
  }
  rep.all_zero = rep.failures.empty();
  if (n >= 2) {
    const MembershipResult control = membership(MPoly::variable(diagonal_ring(n), 0), n);
    rep.control_ok = !control.member;
  } else {
    rep.control_ok = true;
  }
  return rep;
}

}  // namespace pcoinv
