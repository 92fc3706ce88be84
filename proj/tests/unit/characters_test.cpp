#include "support.hpp"

using namespace pcoinv;

TEST_SUITE("characters") {

TEST_CASE("character tables") {
  for (int n = 1; n <= 8; ++n) {
    const CharacterTable t = character_table(n);
    CHECK(t.is_orthogonal());
    std::vector<int> ones_n(static_cast<std::size_t>(n), 1);
    for (const auto& mu : t.partitions) {
      CHECK(t.value({n}, mu) == 1);
      const int sign = (n - static_cast<int>(mu.size())) % 2 == 0 ? 1 : -1;
      CHECK(t.value(ones_n, mu) == sign);
    }
    for (const auto& l : t.partitions) CHECK(t.value(l, ones_n) == syt_count(l));
  }
  const CharacterTable t3 = character_table(3);
  CHECK(t3.value({2, 1}, {1, 1, 1}) == 2);
  CHECK(t3.value({2, 1}, {2, 1}) == 0);
  CHECK(t3.value({2, 1}, {3}) == -1);
  CHECK(mn_character({3, 2}, {3, 1, 1}) == -1);
}

TEST_CASE("principal specialization") {
  const QPoly f = QPoly::from_coeffs({1, 1});
  CHECK(principal_spec({1}, f) == f);
  CHECK(principal_spec({2}, f) == QPoly::from_coeffs({1, 1, 1}));
  CHECK(principal_spec({1, 1}, f) == QPoly::monomial(1));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& l : enumerate_partitions(n)) {
      for (int r = 0; r <= 4; ++r) {
        const QPoly s = principal_spec(l, q_integer(r + 1));
        CHECK(s.has_nonneg_integer_coeffs());
      }
    }
  }
}

TEST_CASE("Frobenius character of the quotient") {
  CHECK(char_P(1, CharMethod::syt).value.to_string() == "s[1]");
  CHECK(char_P(2, CharMethod::syt).value.to_string() == "s[2] + t*q*s[1,1]");
  CHECK(char_P(3, CharMethod::syt).value.to_string() == "s[3] + (t*q + t*q^2)*s[2,1] + t^2*q^3*s[1,1,1]");
  for (int n = 1; n <= 5; ++n) {
    const CharResult syt = char_P(n, CharMethod::syt);
    const CharResult kz = char_P(n, CharMethod::koszul);
    CHECK(kz.ok);
    CHECK(kz.value == syt.value);
    if (n <= 4) {
      const CharResult tr = char_P(n, CharMethod::trace);
      CHECK(tr.ok);
      CHECK(tr.value == syt.value);
    }
  }
}

TEST_CASE("specializations of the character") {
  for (int n = 1; n <= 6; ++n) {
    const SymFunc f = char_P(n, CharMethod::syt).value;
    for (const auto& l : enumerate_partitions(n)) {
      QPoly maj;
      for (const auto& e : enumerate_syt(l)) maj += QPoly::monomial(e.maj);
      CHECK(f.coeff(l).at_t_one() == maj);
      CHECK(f.coeff(l).at_one() == Rational(syt_count(l)));
    }
    CHECK(symfunc_dimension(f) == factorial(n));
  }
}

TEST_CASE("residual characters") {
  CHECK(residual_char(1, 3, ResidualMethod::plethysm).value.to_string() == "s[1]");
  CHECK(residual_char(2, 1, ResidualMethod::plethysm).value == char_P(2, CharMethod::syt).value);
  const CharResult r22 = residual_char(2, 2, ResidualMethod::plethysm);
  CHECK(r22.value.to_string() == "(1 + t*q^2 + t^2*q^4)*s[2] + (t*q + t*q^2 + t*q^3)*s[1,1]");
  CHECK(symfunc_dimension(r22.value) == 6);
  for (const auto& [k, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 2}, {2, 3}}) {
    const CharResult a = residual_char(k, m, ResidualMethod::plethysm);
    const CharResult b = residual_char(k, m, ResidualMethod::trace);
    CHECK(a.ok);
    CHECK(b.ok);
    CHECK(a.value == b.value);
    Integer expected = factorial(k * m);
    for (int i = 0; i < k; ++i) expected /= factorial(m);
    CHECK(symfunc_dimension(a.value) == expected);
  }
}

TEST_CASE("free invariant subalgebra") {
  const InvariantsReport r2 = invariants_free_check(2, 1);
  CHECK(r2.ok);
  std::vector<Integer> dims;
  for (const auto& c : r2.cells) {
    if (c.r == 1) dims.push_back(c.invariant_dim);
  }
  CHECK(dims == std::vector<Integer>{1, 1, 1});

  const InvariantsReport r3 = invariants_free_check(3, 2);
  CHECK(r3.ok);
  for (const auto& c : r3.cells) {
    if (c.r != 2) continue;
    int multisets = 0;
    for (int a = 0; a <= 3; ++a) {
      for (int b = a; b <= 3; ++b) multisets += a + b == c.e;
    }
    CHECK(c.monomial_count == multisets);
    CHECK(c.invariant_dim == multisets);
  }
  CHECK(invariants_free_check(4, 4).ok);
}

TEST_CASE("symmetric function text") {
  SymFunc f;
  f.n = 2;
  f.add({1, 1}, BiPoly::monomial(1, 1) + BiPoly::monomial(0, 2, -1));
  f.add({2}, 3);
  CHECK(f.to_string() == "3*s[2] + (-q^2 + t*q)*s[1,1]");
  CHECK(SymFunc{}.to_string() == "0");
  CHECK(std::string(to_string(SymBasis::powersum)) == "p");
}

}
