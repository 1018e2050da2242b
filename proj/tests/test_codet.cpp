#include <doctest.h>

#include "schurlab/codet.hpp"
#include "schurlab/linalg.hpp"

using namespace schurlab;

TEST_CASE("codeterminant bases have the right size and rank") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r)
      for (const auto& l : compositions(n, r))
        for (const auto& m : compositions(n, r)) {
          auto basis = codet_basis(l, m);
          std::vector<SchurElement> values;
          for (const auto& c : basis) values.push_back(c.value);
          std::size_t dim = margin_matrices(l, m).size();
          CHECK(basis.size() == dim);
          CHECK(exact_rank(values) == dim);
          CHECK(unimodular_change(values, hom_basis(l, m)).unimodular);
        }
}

TEST_CASE("codeterminant of the one-row shape") {
  // Y^{(2,0)}_{11,11} = xi_{11,11} xi_{11,11} = 1_{(2,0)}
  Codeterminant c = codeterminant(Weight{2, 0}, make_multi_index(2, {1, 1}),
                                  make_multi_index(2, {1, 1}));
  CHECK(c.value == idempotent(Weight{2, 0}));
  CHECK(ell_word(Weight{2, 1, 0}).letters == std::vector<int>{1, 1, 2});
  CHECK_THROWS_AS(codeterminant(Weight{1, 2}, make_multi_index(2, {1, 2}),
                                make_multi_index(2, {1, 2})),
                  std::invalid_argument);
}

TEST_CASE("cell datum axioms for S(lambda)") {
  std::size_t opposite_failures = 0;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r)
      for (const auto& l : compositions(n, r)) {
        CellReport rep = cell_datum_check(l);
        INFO(l.to_string());
        CHECK(rep.basis.passed);
        CHECK(rep.involution.passed);
        CHECK(rep.multiplication.passed);
        CHECK(rep.ideal_filtration.passed);
        CHECK(rep.truncation.passed);
        if (!cell_datum_check(l, CellOrder::dominant_is_lower).passed()) ++opposite_failures;
      }
  // The opposite order is not a valid choice.
  CHECK(opposite_failures > 0);
}

TEST_CASE("cell datum axioms for the whole Schur algebra") {
  CHECK(cell_datum_check_full(2, 3).passed());
  CHECK(cell_datum_check_full(3, 2).passed());
  CHECK_FALSE(cell_datum_check_full(2, 2, CellOrder::dominant_is_lower).passed());
}

TEST_CASE("cell shapes are those with nonzero Kostka number") {
  CellReport rep = cell_datum_check(Weight{2, 1, 0});
  CHECK(rep.shapes == std::vector<Weight>{Weight{3, 0, 0}, Weight{2, 1, 0}});
  CHECK(rep.dimension == 2);
}
