#include "support.hpp"

using namespace pcoinv;

TEST_SUITE("qseries") {

TEST_CASE("q-multinomials") {
  CHECK(q_multinomial({2, 1}) == QPoly::from_coeffs({1, 1, 1}));
  CHECK(q_multinomial({5}) == QPoly(1));
  CHECK(q_multinomial({2, 2}) == QPoly::from_coeffs({1, 1, 2, 1, 1}));
  CHECK(q_binomial(4, 2) == QPoly::from_coeffs({1, 1, 2, 1, 1}));
  CHECK(q_factorial(3) == QPoly::from_coeffs({1, 2, 2, 1}));
  CHECK(q_integer(0).is_zero());
}

TEST_CASE("des-maj generating functions") {
  CHECK(A_alpha({2, 1}).to_string() == "1 + t*q + t*q^2");
  CHECK(A_alpha({2, 2}).to_string() == "1 + t*q + 2*t*q^2 + t*q^3 + t^2*q^4");
  CHECK(A_alpha({1, 1, 1}).to_string() == "1 + 2*t*q + 2*t*q^2 + t^2*q^3");
  CHECK(A_alpha({3}) == BiPoly(1));
}

TEST_CASE("t = 1 gives the q-multinomial and q = 1 the Newcomb numbers") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : enumerate_compositions(n)) {
      const BiPoly A = A_alpha(a);
      CHECK(A.at_t_one() == q_multinomial(a));
      QPoly newcomb;
      for (const auto& w : enumerate_words(a)) newcomb += QPoly::monomial(word_stats(w).des);
      CHECK(A.at_q_one() == newcomb);
    }
  }
}

TEST_CASE("MacMahon identity") {
  CHECK(macmahon_check({2, 1}, 5).holds);
  CHECK(macmahon_check({1, 1, 1}, 8).holds);
  const MacMahonReport single = macmahon_check({4}, 6);
  CHECK(single.holds);
  for (int r = 0; r <= 6; ++r) CHECK(single.lhs.coeff(r) == q_binomial(r + 4, 4));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : enumerate_compositions(n)) CHECK(macmahon_check(a, 8).holds);
  }
}

TEST_CASE("q-Ehrhart enumeration") {
  PolytopeSpec simplex{{2}, {1, 2}};
  CHECK(q_ehrhart(simplex, 2) == QPoly::from_coeffs({1, 1, 2, 1, 1}));
  CHECK(q_ehrhart(simplex, 0) == QPoly(1));
  for (int n = 1; n <= 4; ++n) {
    const PolytopeSpec s = PolytopeSpec::product_of_simplices({n});
    for (int r = 0; r <= 6; ++r) CHECK(q_ehrhart(s, r) == q_binomial(r + n, n));
  }
  PolytopeSpec negative{{1, 1}, {-1, 3}};
  CHECK(q_ehrhart(negative, 1) == QPoly::monomial(-1) + 1 + QPoly::monomial(2) + QPoly::monomial(3));
}

TEST_CASE("q-Ehrhart at q = 1 counts lattice points") {
  for (const Composition& a : {Composition{2, 1}, Composition{1, 1, 1}, Composition{3, 2}}) {
    const PolytopeSpec s = PolytopeSpec::product_of_simplices(a);
    for (int r = 0; r <= 4; ++r) {
      Integer expected = 1;
      for (int ai : a) expected *= binomial(r + ai, ai);
      CHECK(s.lattice_point_count(r) == expected);
      CHECK(q_ehrhart(s, r).at_one() == Rational(expected));
    }
  }
}

TEST_CASE("budget and validation errors") {
  const PolytopeSpec s = PolytopeSpec::product_of_simplices({3, 3});
  CHECK_THROWS_AS(q_ehrhart(s, 10, 100), BudgetExceeded);
  PolytopeSpec bad{{2, 1}, {1, 2}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("Segre Hilbert series") {
  const BiSeries s21 = segre_hilbert({2, 1}, 4, SegreMethod::closed_form);
  const BiSeries expected = inv_product_series(range_exponents(3), 4) * A_alpha({2, 1});
  CHECK(s21 == expected);
  // At q = 1: (1 + 2t) / (1 - t)^4.
  const std::vector<long> at_one{1, 6, 18, 40, 75};
  for (int r = 0; r <= 4; ++r) CHECK(s21.coeff(r).at_one() == at_one[static_cast<std::size_t>(r)]);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : enumerate_compositions(n)) {
      CHECK(segre_hilbert(a, 5, SegreMethod::lattice) == segre_hilbert(a, 5, SegreMethod::closed_form));
    }
  }
}

}
