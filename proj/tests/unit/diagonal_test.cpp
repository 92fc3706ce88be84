#include "support.hpp"

using namespace pcoinv;

TEST_SUITE("diagonal") {

TEST_CASE("polarized power sums") {
  const auto g1 = diagonal_invariant_generators(1);
  REQUIRE(g1.size() == 2);
  CHECK(g1[0].poly.to_string() == "a1");
  CHECK(g1[1].poly.to_string() == "b1");
  std::vector<std::pair<int, int>> rs;
  for (const auto& g : diagonal_invariant_generators(2)) rs.emplace_back(g.r, g.s);
  CHECK(rs == std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
  for (int n = 1; n <= 4; ++n) CHECK(static_cast<int>(diagonal_invariant_generators(n).size()) == n * (n + 3) / 2);
}

TEST_CASE("membership") {
  const RingPtr ring = diagonal_ring(2);
  const MPoly a1 = MPoly::variable(ring, 0), a2 = MPoly::variable(ring, 1);
  const MPoly b1 = MPoly::variable(ring, 2), b2 = MPoly::variable(ring, 3);
  CHECK(membership(a1 + a2, 2).member);
  const MembershipResult m = membership(a1 * b2, 2);
  CHECK(m.member);
  CHECK(m.certificate_verified);
  CHECK_FALSE(membership(a1, 2).member);
  CHECK_FALSE(membership(a1 - a2, 2).member);
  CHECK(membership(a1.pow(2) * b2, 2).member);
  CHECK_THROWS_AS(membership(a1 + a1 * b1, 2), std::invalid_argument);
  CHECK(bidegree(2, Exponent{1, 0, 2, 1}) == std::pair<int, int>{1, 3});
}

TEST_CASE("subset products vanish") {
  CHECK(phi_product(2, 1U).to_string() == "a1*b2");
  for (int n = 1; n <= 4; ++n) {
    const PhiTrivialReport r = phi_trivial_check(n);
    CHECK(r.all_zero);
    CHECK(r.control_ok);
    CHECK(r.subsets == (1 << n));
    CHECK(r.failures.empty());
  }
}

}
