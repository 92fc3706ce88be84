#include "support.hpp"

using namespace pcoinv;

TEST_SUITE("combinat") {

TEST_CASE("parsing") {
  CHECK(parse_composition("2,1,3") == Composition{2, 1, 3});
  CHECK_THROWS_AS(parse_composition("2,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_composition(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_composition("2,,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
  CHECK(parse_partition("3,1,1") == Partition{3, 1, 1});
  CHECK(parse_word("2121") == Word{2, 1, 2, 1});
}

TEST_CASE("words of a composition") {
  std::vector<std::string> w21;
  for (const auto& w : enumerate_words({2, 1})) w21.push_back(word_to_string(w));
  CHECK(w21 == std::vector<std::string>{"112", "121", "211"});

  std::vector<std::string> w22;
  for (const auto& w : enumerate_words({2, 2})) w22.push_back(word_to_string(w));
  CHECK(w22 == std::vector<std::string>{"1122", "1212", "1221", "2112", "2121", "2211"});

  const auto single = enumerate_words({4});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == Word{1, 1, 1, 1});
}

TEST_CASE("word counts equal multinomials") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& a : enumerate_compositions(n)) {
      const auto ws = enumerate_words(a);
      CHECK(Integer(static_cast<long>(ws.size())) == multinomial(a));
      CHECK(std::is_sorted(ws.begin(), ws.end()));
      CHECK(std::adjacent_find(ws.begin(), ws.end()) == ws.end());
    }
  }
}

TEST_CASE("descent statistics") {
  const WordStats s = word_stats({2, 1, 1});
  CHECK(s.descents == std::vector<int>{1});
  CHECK(s.des == 1);
  CHECK(s.maj == 1);
  const WordStats flat = word_stats({1, 1, 1});
  CHECK(flat.des == 0);
  CHECK(flat.maj == 0);
  const WordStats rev = word_stats({3, 2, 1});
  CHECK(rev.descents == std::vector<int>{1, 2});
  CHECK(rev.maj == 3);
}

TEST_CASE("lattice paths") {
  const LatticePath p = word_to_path({2, 1, 2, 1}, 2);
  CHECK(p.front() == Point{0, 0});
  CHECK(p.back() == Point{2, 2});
  CHECK(path_descent_points(p) == std::vector<Point>{{0, 1}, {1, 2}});
  CHECK(path_descent_points(word_to_path({1, 2, 1, 2}, 2)) == std::vector<Point>{{1, 1}});
  CHECK(path_descent_points(word_to_path({1, 1, 1}, 1)).empty());
  CHECK_THROWS_AS(path_to_word({{0, 0}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("word to path round trip") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : enumerate_compositions(n)) {
      for (const auto& w : enumerate_words(a)) {
        const LatticePath p = word_to_path(w, static_cast<int>(a.size()));
        CHECK(path_to_word(p) == w);
        std::vector<Point> expected;
        for (int i : word_stats(w).descents) expected.push_back(p[static_cast<std::size_t>(i)]);
        CHECK(path_descent_points(p) == expected);
      }
    }
  }
}

TEST_CASE("partitions and compositions") {
  CHECK(enumerate_partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(enumerate_partitions(5).size() == 7);
  CHECK(enumerate_partitions(8).size() == 22);
  CHECK(enumerate_compositions(3).size() == 4);
  for (int n = 1; n <= 8; ++n) CHECK(enumerate_compositions(n).size() == (1U << (n - 1)));
}

TEST_CASE("permutations") {
  CHECK(enumerate_permutations(4).size() == 24);
  CHECK(cycle_type({1, 0, 3, 4, 2}) == Partition{3, 2});
  CHECK(centralizer_order({2, 1, 1}) == 4);
  for (const auto& mu : enumerate_partitions(6)) CHECK(cycle_type(permutation_of_cycle_type(mu)) == mu);
  const Permutation a{1, 2, 0}, b{1, 0, 2};
  CHECK(compose(a, b) == Permutation{2, 1, 0});
  CHECK(permutation_word({2, 0, 1}) == Word{3, 1, 2});
}

TEST_CASE("standard Young tableaux") {
  const auto row = enumerate_syt({4});
  REQUIRE(row.size() == 1);
  CHECK(row[0].des == 0);
  const auto col = enumerate_syt({1, 1, 1});
  REQUIRE(col.size() == 1);
  CHECK(col[0].des == 2);
  CHECK(col[0].maj == 3);
  std::vector<std::pair<int, int>> stats;
  for (const auto& e : enumerate_syt({2, 1})) stats.emplace_back(e.des, e.maj);
  std::sort(stats.begin(), stats.end());
  CHECK(stats == std::vector<std::pair<int, int>>{{1, 1}, {1, 2}});
}

TEST_CASE("tableaux are standard and counted by hooks") {
  for (int n = 1; n <= 7; ++n) {
    Integer squares = 0;
    for (const auto& l : enumerate_partitions(n)) {
      const auto tabs = enumerate_syt(l);
      CHECK(Integer(static_cast<long>(tabs.size())) == syt_count(l));
      squares += syt_count(l) * syt_count(l);
      for (const auto& e : tabs) {
        std::vector<int> seen;
        for (std::size_t r = 0; r < e.tableau.rows.size(); ++r) {
          const auto& row = e.tableau.rows[r];
          CHECK(static_cast<int>(row.size()) == l[r]);
          for (std::size_t c = 0; c < row.size(); ++c) {
            seen.push_back(row[c]);
            if (c + 1 < row.size()) CHECK(row[c] < row[c + 1]);
            if (r > 0) CHECK(e.tableau.rows[r - 1][c] < row[c]);
          }
        }
        std::sort(seen.begin(), seen.end());
        for (int i = 0; i < n; ++i) CHECK(seen[static_cast<std::size_t>(i)] == i + 1);
      }
    }
    CHECK(squares == factorial(n));
  }
}

}
