#include "support.hpp"

#include <random>

using namespace pcoinv;

TEST_SUITE("exact") {

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("bipoly arithmetic") {
  const BiPoly tq = BiPoly::monomial(1, 1);
  CHECK((1 + tq) * (1 - tq) == 1 - BiPoly::monomial(2, 2));
  CHECK(bipoly_arith(1 + tq, 1 - tq, BiOp::mul) == 1 - BiPoly::monomial(2, 2));
  CHECK(bipoly_arith(tq, tq, BiOp::sub).is_zero());
  const BiPoly p = 1 + 2 * tq + BiPoly::monomial(1, 2, 2) + BiPoly::monomial(2, 3);
  CHECK(p * 1 == p);
  CHECK(p.to_string() == "1 + 2*t*q + 2*t*q^2 + t^2*q^3");
  CHECK(p.is_palindromic());
  CHECK(p.t_degree() == 2);
  CHECK(p.at_t_one() == QPoly::from_coeffs({1, 2, 2, 1}));
  CHECK((tq - tq).terms().empty());
}

TEST_CASE("bipoly ring axioms on random inputs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), ex(0, 3);
  auto random_poly = [&] {
    BiPoly p;
    for (int i = 0; i < 5; ++i) p.add_term(ex(rng), ex(rng), coef(rng));
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const BiPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    const BiPoly ab = a * b;
    for (const auto& [k, v] : ab.terms()) CHECK(v != 0);
  }
}

TEST_CASE("qpoly division and substitution") {
  const QPoly a = QPoly::from_coeffs({1, 1});
  const QPoly b = QPoly::from_coeffs({1, 0, 1});
  CHECK(exact_divide(a * b, b) == a);
  CHECK_THROWS_AS(exact_divide(b, a), std::domain_error);
  CHECK(a.substitute_power(3) == QPoly::from_coeffs({1, 0, 0, 1}));
  CHECK(QPoly::from_coeffs({0, 1, 0, 1}).is_palindromic());
  CHECK(QPoly::from_coeffs({1, 2, 3}).to_string() == "1 + 2*q + 3*q^2");
}

TEST_CASE("inverse product series") {
  const BiSeries s = inv_product_series({0, 1, 2}, 1);
  CHECK(s.coeff(1) == QPoly::from_coeffs({1, 1, 1}));
  const BiSeries empty = inv_product_series({}, 4);
  CHECK(empty.coeff(0) == QPoly(1));
  for (int r = 1; r <= 4; ++r) CHECK(empty.coeff(r).is_zero());
  for (int n = 0; n <= 4; ++n) {
    const auto exps = range_exponents(n);
    const BiSeries inv = inv_product_series(exps, 6);
    for (int r = 0; r <= 6; ++r) CHECK(inv.coeff(r) == q_binomial(r + n, n));
    const BiSeries one = inv * product_one_minus_tq(exps);
    CHECK(one == BiSeries::from_bipoly(1, 6));
  }
}

TEST_CASE("series products are truncated") {
  const BiSeries a = BiSeries::from_bipoly(1 + BiPoly::t(), 2);
  const BiSeries sq = a * a * a;
  CHECK(sq.order() == 2);
  CHECK(sq.coeff(2) == QPoly(3));
  CHECK(sq.to_bipoly().t_degree() == 2);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == QPoly::from_coeffs({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == QPoly::from_coeffs({1, 1}));
  CHECK(cyclotomic_polynomial(4) == QPoly::from_coeffs({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == QPoly::from_coeffs({1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) == QPoly::from_coeffs({1, 0, -1, 0, 1}));
}

TEST_CASE("powers of the root are distinct with exact order n") {
  for (int n = 1; n <= 12; ++n) {
    const FieldPtr f = CyclotomicField::make(n);
    std::vector<CycloElem> powers;
    for (int i = 0; i < n; ++i) powers.push_back(f->root_power(i));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) CHECK(powers[static_cast<std::size_t>(i)] != powers[static_cast<std::size_t>(j)]);
    }
    CHECK(f->root_power(n).is_one());
    CHECK(multiplicative_order(f->root_power(1), n) == n);
    CHECK(static_cast<int>(f->root_power(1).coeffs().size()) <= f->degree());
  }
}

TEST_CASE("cyclotomic field arithmetic") {
  const FieldPtr f = CyclotomicField::make(5);
  const CycloElem eta = f->root_power(1);
  const CycloElem x = eta + f->from_rational(Rational(2, 3));
  CHECK((x * x.inverse()).is_one());
  CHECK(eta.pow(-1) == f->root_power(4));
  CycloElem sum = f->zero();
  for (int i = 0; i < 5; ++i) sum += f->root_power(i);
  CHECK(sum.is_zero());
}

TEST_CASE("exact matrix rank") {
  CHECK(rank(ExactMatrix<Rational>::identity(3, 0, 1)) == 3);
  CHECK(rank(ExactMatrix<Rational>(3, 4, 0)) == 0);
  CHECK(rank(ExactMatrix<Rational>(0, 4, 0)) == 0);

  // 2x2 minors of the Segre point (1, a, b) x (1, c) vanish: rank 1.
  ExactMatrix<Rational> seg(2, 3, 0);
  const Rational a(2, 3), b(-5), c(7, 2);
  seg(0, 0) = 1;
  seg(0, 1) = a;
  seg(0, 2) = b;
  seg(1, 0) = c;
  seg(1, 1) = a * c;
  seg(1, 2) = b * c;
  CHECK(rank(seg) == 1);
}

TEST_CASE("rank is unchanged by row permutation and scaling") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    ExactMatrix<Rational> m(5, 6, 0);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 6; ++j) m(i, j) = d(rng);
    }
    for (int j = 0; j < 6; ++j) {
      m(3, j) = m(0, j) - m(1, j);
      m(4, j) = m(2, j) * 3 + m(1, j);
    }
    const int r = rank(m);
    CHECK(r <= 3);
    ExactMatrix<Rational> p = m;
    p.swap_rows(0, 4);
    p.swap_rows(1, 3);
    for (int j = 0; j < 6; ++j) p(2, j) *= Rational(-7, 5);
    CHECK(rank(p) == r);
    CHECK(rref(m).rank() == r);
  }
}

TEST_CASE("cyclotomic rank") {
  const FieldPtr f = CyclotomicField::make(3);
  ExactMatrix<CycloElem> m(3, 3, f->zero());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = f->root_power(i * j);
  }
  CHECK(rank(m) == 3);
  for (int j = 0; j < 3; ++j) m(2, j) = m(0, j) + m(1, j);
  CHECK(rank(m) == 2);
}

TEST_CASE("kernel and row combinations") {
  ExactMatrix<Rational> m(2, 3, 0);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(0, 2) = 3;
  m(1, 0) = 2;
  m(1, 1) = 4;
  m(1, 2) = 7;
  const auto k = kernel(m);
  REQUIRE(k.size() == 1);
  for (int i = 0; i < 2; ++i) {
    Rational s = 0;
    for (int j = 0; j < 3; ++j) s += m(i, j) * k[0][static_cast<std::size_t>(j)];
    CHECK(s == 0);
  }
  const auto sol = solve_row_combination(m, {3, 6, 10});
  REQUIRE(sol);
  CHECK((*sol)[0] * 1 + (*sol)[1] * 2 == 3);
  CHECK_FALSE(solve_row_combination(m, {0, 1, 0}));
}

TEST_CASE("span complement agrees with exact elimination") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-4, 4), col(0, 11);
  for (int trial = 0; trial < 20; ++trial) {
    SparseIntMatrix a(12);
    for (int i = 0; i < 9; ++i) {
      std::vector<std::pair<int, long>> row;
      for (int t = 0; t < 4; ++t) row.emplace_back(col(rng), d(rng));
      a.add_row(row);
    }
    const SpanComplement fast = span_complement(a);
    const SpanComplement slow = span_complement(a, SpanOptions{true, 64});
    CHECK(fast.rank == slow.rank);
    CHECK(fast.free_cols == slow.free_cols);
    CHECK(fast.kernel == slow.kernel);
    CHECK(slow.method == SpanMethod::exact_elimination);
    for (const auto& row : a.row_list()) {
      const auto coords = fast.quotient_coords(row);
      for (const auto& c : coords) CHECK(c == 0);
    }
  }
}

TEST_CASE("sparse rows merge duplicates") {
  SparseIntMatrix a(4);
  a.add_row({{3, 1}, {1, 2}, {3, -1}, {1, 1}});
  REQUIRE(a.row(0).size() == 1);
  CHECK(a.row(0)[0] == std::pair<int, long>{1, 3});
  CHECK(rank_mod_p(a, word_primes(1)[0]) == 1);
}

TEST_CASE("rational reconstruction") {
  const Integer m = Integer(1000003) * 1000033;
  Rational out;
  const Rational x(-17, 29);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), Integer(29).get_mpz_t(), m.get_mpz_t());
  Integer u = (Integer(-17) * inv) % m;
  if (u < 0) u += m;
  REQUIRE(rational_reconstruct(u, m, out));
  CHECK(out == x);
}

}
