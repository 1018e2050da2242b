#pragma once

// Codeterminant bases Y^nu_{i,j} = xi_{i,l(nu)} xi_{l(nu),j} and a
// computational check of the cell-datum axioms on them.

#include <string>
#include <vector>

#include "schurlab/combinatorics.hpp"
#include "schurlab/schur.hpp"

namespace schurlab {

/// nu_1 ones, then nu_2 twos, and so on.
MultiIndex ell_word(const Weight& nu);

struct Codeterminant {
  Weight shape;
  Tableau left;
  Tableau right;
  SchurElement value;
};

/// Throws std::invalid_argument if nu is not dominant or the words do not
/// fit the shape.
Codeterminant codeterminant(const Weight& nu, const MultiIndex& i, const MultiIndex& j);

/// Y^nu_{i,j} over dominant nu and semistandard T^nu_i, T^nu_j of weights
/// lambda, mu. Ordered by shape (compositions() order), then left, then
/// right tableau.
std::vector<Codeterminant> codet_basis(const Weight& lambda, const Weight& mu);

/// The full codeterminant basis of S(n, r): codet_basis over all blocks.
std::vector<Codeterminant> codet_basis_full(int n, int r);

/// Which cells count as strictly higher in the cellular multiplication rule.
enum class CellOrder {
  dominant_is_higher,  // a C^nu = sum r C^nu mod span{C^mu : mu strictly dominates nu}
  dominant_is_lower,   // mod span{C^mu : nu strictly dominates mu}
};

struct AxiomResult {
  bool passed = true;
  std::vector<std::string> witnesses;

  void fail(std::string witness);
};

struct CellReport {
  std::vector<Weight> shapes;  // Lambda, those with a nonempty M(nu)
  std::size_t dimension = 0;
  AxiomResult basis;           // (a)
  AxiomResult involution;      // (b)
  AxiomResult multiplication;  // (c)
  AxiomResult ideal_filtration;
  AxiomResult truncation;      // e A e for e = 1_lambda, only for S(lambda)

  bool passed() const {
    return basis.passed && involution.passed && multiplication.passed &&
           ideal_filtration.passed && truncation.passed;
  }
};

/// Builds the candidate cell datum of S(lambda) = 1_lambda S(n, r) 1_lambda
/// from codet_basis(lambda, lambda) and checks every axiom exhaustively.
CellReport cell_datum_check(const Weight& lambda,
                            CellOrder order = CellOrder::dominant_is_higher);

/// Same checks for the whole of S(n, r) with codet_basis_full.
CellReport cell_datum_check_full(int n, int r,
                                 CellOrder order = CellOrder::dominant_is_higher);

}  // namespace schurlab
