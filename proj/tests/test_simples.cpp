#include <doctest.h>

#include "oracles.hpp"
#include "schurlab/simples.hpp"

using namespace schurlab;

TEST_CASE("simple modules of S((2,1))") {
  auto rep = simple_index_set(Weight{2, 1});
  REQUIRE(rep.entries.size() == 2);
  CHECK(rep.entries[0].first == Weight{3, 0});
  CHECK(rep.entries[0].second == 1);
  CHECK(rep.entries[1].first == Weight{2, 1});
  CHECK(rep.entries[1].second == 1);
  CHECK(rep.dominance_agrees);
  CHECK(rep.char_p == "not computed");
}

TEST_CASE("extreme weights") {
  for (int r = 1; r <= 4; ++r) {
    Weight omega(std::vector<int>(r, 1));
    auto all = simple_index_set(omega);
    CHECK(all.entries.size() == dominant_compositions(r, r).size());
    std::vector<int> top(r, 0);
    top[0] = r;
    auto one = simple_index_set(Weight(top));
    REQUIRE(one.entries.size() == 1);
    CHECK(one.entries[0].first == Weight(top));
    CHECK(one.entries[0].second == 1);
  }
  CHECK(simple_dim_char0(Weight{1, 1, 1}, Weight{2, 1, 0}) == 2);
  CHECK_THROWS_AS(simple_dim_char0(Weight{1, 1, 1}, Weight{1, 2, 0}), std::invalid_argument);
}

TEST_CASE("sum of squared multiplicities is the dimension") {
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= 4; ++r)
      for (const auto& l : compositions(n, r)) {
        INFO(l.to_string());
        CHECK(kostka_square_sum(l) == margin_matrices(l, l).size());
        if (n <= 3) CHECK(kostka_square_sum(l) == oracle::margin_count(l, l));
      }
}

TEST_CASE("the index set depends only on the sorted weight") {
  for (int n = 2; n <= 3; ++n)
    for (int r = 1; r <= 4; ++r)
      for (const auto& l : compositions(n, r)) {
        auto rep = simple_index_set(l);
        CHECK(rep.dominance_agrees);
        CHECK(rep.entries == simple_index_set(sort_dominant(l)).entries);
        std::size_t expected = 0;
        for (const auto& mu : dominant_compositions(n, r))
          expected += dominance_leq(sort_dominant(l), mu);
        CHECK(rep.entries.size() == expected);
      }
}

TEST_CASE("generic algebra within a dominance window") {
  auto rep = udot_simple_index_set(Weight{0, -1}, 2);
  // Candidates (0,-1), (1,-2), (2,-3).
  REQUIRE(rep.entries.size() == 3);
  CHECK(rep.entries[0].first == Weight{2, -3});
  CHECK(rep.entries.back().first == Weight{0, -1});
  for (const auto& e : rep.entries) CHECK(e.second == 1);
  CHECK(rep.dominance_agrees);
  CHECK(rep.window == 2);
  auto r3 = udot_simple_index_set(Weight{-1, 0, -1}, 3);
  CHECK(r3.dominance_agrees);
  for (const auto& [mu, k] : r3.entries) CHECK(k == kostka_shifted(mu, Weight{-1, 0, -1}));
  CHECK(kostka_shifted(Weight{1, 0, -1}, Weight{0, 0, 0}) == 2);
  CHECK(kostka_shifted(Weight{0, 1}, Weight{1, 0}) == 0);
  CHECK_THROWS_AS(udot_simple_index_set(Weight{1, 0}, -1), std::invalid_argument);
}
