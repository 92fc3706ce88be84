#include "support.hpp"

using namespace pcoinv;

TEST_SUITE("quotient") {

TEST_CASE("ideal ranks") {
  CHECK(ideal_rank({1, 1}, 1, 0) == 1);
  CHECK(ideal_rank({2, 1}, 1, 4) == 0);
  CHECK(ideal_rank({2, 1}, 1, 9) == 0);
  QuotientAlgebra p3(ones(3));
  std::vector<int> ranks, dims;
  for (int e = 0; e <= 4; ++e) {
    ranks.push_back(p3.ideal_rank(1, e));
    dims.push_back(p3.quotient_dim(1, e));
  }
  CHECK(ranks == std::vector<int>{1, 1, 1, 1, 0});
  CHECK(dims == std::vector<int>{0, 2, 2, 0, 0});
}

TEST_CASE("Hilbert series of the quotient") {
  CHECK(hilbert_P({2, 1}).series.to_string() == "1 + t*q + t*q^2");
  CHECK(hilbert_P({4}).series == BiPoly(1));
  CHECK(hilbert_P(ones(3)).series.to_string() == "1 + 2*t*q + 2*t*q^2 + t^2*q^3");
  for (int n = 1; n <= 4; ++n) {
    for (const auto& a : enumerate_compositions(n)) {
      const HilbertResult h = hilbert_P(a);
      CHECK(h.ok);
      CHECK(h.series == A_alpha(a));
    }
  }
}

TEST_CASE("Gorenstein symmetry of the full quotient") {
  for (int n = 1; n <= 5; ++n) {
    const BiPoly h = hilbert_P(ones(n)).series;
    CHECK(h.is_palindromic());
    CHECK(h.t_degree() == n - 1);
    CHECK(h.q_degree() == n * (n - 1) / 2);
    CHECK(h.coeff(n - 1, n * (n - 1) / 2) == 1);
    CHECK(h.at_t_one() == q_factorial(n));
  }
}

TEST_CASE("traces on quotient pieces") {
  QuotientAlgebra p2(ones(2));
  const Permutation swap{1, 0};
  CHECK(p2.ambient_trace(swap, 1, 1) == 0);
  CHECK(p2.trace(swap, 1, 1) == -1);
  CHECK(p2.trace_ambient_minus_ideal(swap, 1, 1) == -1);

  for (int n = 1; n <= 4; ++n) {
    QuotientAlgebra pn(ones(n));
    const Permutation id = identity_permutation(n);
    Rational total_dim = 0;
    for (int r = 0; r < n; ++r) {
      for (int e = 0; e <= n * (n - 1) / 2 + r; ++e) {
        const Rational t = pn.trace(id, r, e);
        CHECK(t == pn.quotient_dim(r, e));
        total_dim += t;
      }
    }
    CHECK(total_dim == Rational(factorial(n)));
  }
}

TEST_CASE("dual and difference traces agree") {
  for (int n = 2; n <= 4; ++n) {
    QuotientAlgebra pn(ones(n));
    for (const auto& mu : enumerate_partitions(n)) {
      const Permutation g = permutation_of_cycle_type(mu);
      for (int r = 1; r < n; ++r) {
        for (int e = 0; e <= n * r; ++e) CHECK(pn.trace(g, r, e) == pn.trace_ambient_minus_ideal(g, r, e));
      }
    }
  }
}

TEST_CASE("ambient traces follow the cycle formula") {
  for (int n = 1; n <= 4; ++n) {
    QuotientAlgebra pn(ones(n));
    for (const auto& mu : enumerate_partitions(n)) {
      const Permutation g = permutation_of_cycle_type(mu);
      for (int r = 0; r <= 3; ++r) {
        // Brute force: count fixed monomials of the piece directly.
        const Piece& piece = pn.piece(r);
        QPoly fixed;
        for (const auto& m : piece.basis()) {
          if (pn.space().act(g, m) == m) fixed.add_term(pn.space().q_degree(m), 1);
        }
        CHECK(fixed == ambient_trace_formula(mu, r));
        for (int e = 0; e <= n * r; ++e) CHECK(pn.ambient_trace(g, r, e) == fixed.coeff(e));
      }
    }
  }
}

TEST_CASE("residual traces need a rectangular composition") {
  QuotientAlgebra mixed({2, 1});
  CHECK_THROWS_AS(mixed.trace({1, 0}, 1, 1), std::invalid_argument);
  QuotientAlgebra rect({2, 2});
  Rational total_dim = 0;
  for (int r = 0; r <= 2; ++r) {
    for (int e = 0; e <= 4 * r; ++e) total_dim += rect.trace({0, 1}, r, e) + rect.trace({1, 0}, r, e);
  }
  // Identity contributes dim = 6, the swap contributes 3 - 3.
  CHECK(total_dim == 6);
}

TEST_CASE("invariant dimensions") {
  ClassTraceTable t3(3);
  CHECK(invariant_hilbert(t3, ones(3)) == hilbert_P(ones(3)).series);
  CHECK(invariant_hilbert(t3, {3}) == BiPoly(1));
  CHECK(invariant_hilbert(t3, {2, 1}).to_string() == "1 + t*q + t*q^2");
  CHECK(invariant_dim(3, {2, 1}, 1, 2) == 1);
  CHECK(invariant_dim(3, {2, 1}, 1, 3) == 0);
  for (int n = 1; n <= 4; ++n) {
    ClassTraceTable table(n);
    for (const auto& a : enumerate_compositions(n)) CHECK(invariant_hilbert(table, a) == A_alpha(a));
  }
}

TEST_CASE("quotient coordinates") {
  QuotientAlgebra p3(ones(3));
  const SegreSpace& s = p3.space();
  // f~_1 lies in the ideal; each of its three monomials has the same class up to sign.
  const auto c1 = p3.quotient_coords(s.generator({1, 0, 0}));
  const auto c2 = p3.quotient_coords(s.generator({0, 1, 0}));
  const auto c3 = p3.quotient_coords(s.generator({0, 0, 1}));
  REQUIRE(c1.size() == 2);
  for (std::size_t i = 0; i < c1.size(); ++i) CHECK(c1[i] + c2[i] + c3[i] == 0);
  CHECK(p3.quotient_coords(s.generator({0, 0, 0})).empty());
}

}
