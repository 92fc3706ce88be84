#include "support.hpp"

using namespace pcoinv;

TEST_SUITE("serialize") {

TEST_CASE("polynomial JSON round trips") {
  const BiPoly a = A_alpha({2, 1}) - BiPoly::monomial(2, 0, Rational(1, 2));
  CHECK(bipoly_to_json(A_alpha({2, 1})).dump() == R"([[0,0,"1"],[1,1,"1"],[1,2,"1"]])");
  CHECK(bipoly_from_json(bipoly_to_json(a)) == a);
  const QPoly q = QPoly::monomial(-1, 3) + QPoly::from_coeffs({0, 2});
  CHECK(qpoly_to_json(q).dump() == R"([[-1,"3"],[1,"2"]])");
  CHECK(qpoly_from_json(qpoly_to_json(q)) == q);
}

TEST_CASE("symmetric function JSON") {
  const SymFunc f = char_P(3, CharMethod::syt).value;
  CHECK(symfunc_to_json(f).dump() == R"({"3":[[0,0,"1"]],"2,1":[[1,1,"1"],[1,2,"1"]],"1,1,1":[[2,3,"1"]]})");
  CHECK(symfunc_from_json(symfunc_to_json(f), 3) == f);
}

TEST_CASE("combinatorial objects") {
  CHECK(path_to_json(word_to_path({2, 1}, 2)).dump() == "[[0,0],[0,1],[1,1]]");
  const auto tabs = enumerate_syt({2, 1});
  CHECK(tableau_to_json(tabs.front().tableau).dump() == "[[1,2],[3]]");
  const Presentation p = presentation_R_symbolic({2, 1});
  CHECK(mpoly_to_json(p.generators[2]).dump() == R"([[[["u2",1],["v1",1]],"1"],[[["s",1]],"-1"]])");
}

TEST_CASE("series JSON") {
  const BiSeries s = inv_product_series({0, 1}, 1);
  CHECK(biseries_to_json(s).dump() == R"([[[0,"1"]],[[0,"1"],[1,"1"]]])");
}

}
