#include <doctest.h>

#include "oracles.hpp"
#include "schurlab/combinatorics.hpp"

using namespace schurlab;

TEST_CASE("compositions come in reverse-lex order with the right count") {
  auto c = compositions(2, 2);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == Weight{2, 0});
  CHECK(c[1] == Weight{1, 1});
  CHECK(c[2] == Weight{0, 2});
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= 5; ++r)
      CHECK(Integer(static_cast<unsigned long>(compositions(n, r).size())) ==
            binomial(n + r - 1, r));
  CHECK(dominant_compositions(3, 3) ==
        std::vector<Weight>{Weight{3, 0, 0}, Weight{2, 1, 0}, Weight{1, 1, 1}});
}

TEST_CASE("margin matrices agree with exhaustive search") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 4; ++r)
      for (const auto& l : compositions(n, r))
        for (const auto& m : compositions(n, r)) {
          auto list = margin_matrices(l, m);
          CHECK(list.size() == oracle::margin_count(l, m));
          CHECK(std::is_sorted(list.begin(), list.end()));
          for (const auto& a : list) {
            CHECK(a.row_sums() == l);
            CHECK(a.col_sums() == m);
          }
        }
  CHECK(margin_matrices(Weight{2, 1}, Weight{2, 1}).size() == 2);
  CHECK_THROWS_AS(margin_matrices(Weight{2, 1}, Weight{2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(margin_matrices(Weight{2, 1}, Weight{1, 1, 1}), std::invalid_argument);
}

TEST_CASE("pair_to_matrix inverts canonical_pair") {
  for (const auto& a : theta(3, 3)) {
    auto [i, j] = canonical_pair(a);
    CHECK(pair_to_matrix(i, j) == a);
  }
  auto a = pair_to_matrix(make_multi_index(2, {1, 2, 2}), make_multi_index(2, {2, 1, 2}));
  CHECK(a == MarginMatrix::from_rows({{0, 1}, {1, 1}}));
  CHECK_THROWS(make_multi_index(2, {1, 3}));
}

TEST_CASE("Kostka numbers match brute-force fillings") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 5; ++r)
      for (const auto& mu : dominant_compositions(n, r))
        for (const auto& l : compositions(n, r)) CHECK(kostka(mu, l) == oracle::kostka(mu, l));
  CHECK(kostka(Weight{2, 1, 0}, Weight{1, 1, 1}) == 2);
  CHECK(kostka(Weight{3, 0, 0}, Weight{1, 1, 1}) == 1);
  CHECK(kostka(Weight{1, 1, 1}, Weight{3, 0, 0}) == 0);
  CHECK_THROWS_AS(ssyt(Weight{1, 2}, Weight{2, 1}), std::invalid_argument);
}

TEST_CASE("semistandard tableaux are semistandard of the requested weight") {
  for (const auto& mu : dominant_compositions(3, 4))
    for (const auto& l : compositions(3, 4)) {
      auto list = ssyt(mu, l);
      for (std::size_t t = 0; t < list.size(); ++t) {
        CHECK(list[t].is_semistandard());
        CHECK(list[t].weight(3) == l);
        CHECK(tableau_of_word(mu, make_multi_index(3, list[t].reading_word())) == list[t]);
        if (t) CHECK(list[t - 1].reading_word() < list[t].reading_word());
      }
    }
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(Weight{1, 1, 1}, Weight{2, 1, 0}));
  CHECK(dominance_leq(Weight{2, 1, 0}, Weight{3, 0, 0}));
  CHECK_FALSE(dominance_leq(Weight{3, 0, 0}, Weight{2, 1, 0}));
  // Partial sums (2,4,4,4) and (3,3,4,4) are incomparable.
  CHECK_FALSE(dominance_leq(Weight{2, 2, 0, 0}, Weight{3, 0, 1, 0}));
  CHECK_FALSE(dominance_leq(Weight{3, 0, 1, 0}, Weight{2, 2, 0, 0}));
  CHECK_THROWS_AS(dominance_leq(Weight{1, 1}, Weight{3, 0}), std::invalid_argument);
  CHECK(sort_dominant(Weight{0, 2, 1}) == Weight{2, 1, 0});
}

TEST_CASE("permutations and multinomials") {
  auto p = permutations(3);
  REQUIRE(p.size() == 6);
  CHECK(p.front() == std::vector<int>{1, 2, 3});
  CHECK(p.back() == std::vector<int>{3, 2, 1});
  CHECK(multinomial(Weight{2, 1, 0}) == 3);
  CHECK(multinomial(Weight{1, 1, 1}) == 6);
}
