#pragma once

// Exact dense linear algebra over Z and Q, sized for desk-scale basis
// verification.

#include <optional>
#include <vector>

#include "schurlab/rational.hpp"
#include "schurlab/schur.hpp"

namespace schurlab {

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Row-scales each row by the lcm of its denominators.
IntegerMatrix clear_denominators(const RationalMatrix& m);

/// Rank by fraction-free (Bareiss) elimination.
std::size_t rank(const IntegerMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Bareiss determinant of a square matrix.
Integer determinant(const IntegerMatrix& m);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// True iff the Z-span of the rows equals Z^dim.
bool spans_integer_lattice(const IntegerMatrix& rows, std::size_t dim);

/// Coordinates with respect to a fixed family of linearly independent
/// Schur elements.
class BasisCoordinates {
 public:
  explicit BasisCoordinates(const std::vector<SchurElement>& basis);

  std::size_t size() const { return size_; }
  /// nullopt when x is outside the span.
  std::optional<std::vector<Rational>> coordinates(const SchurElement& x) const;

 private:
  std::size_t size_ = 0;
  std::vector<MarginMatrix> pivots_;   // one label per basis vector
  RationalMatrix pivot_inverse_;       // (basis restricted to pivots)^-1
  std::vector<SchurElement> basis_;
};

/// Dense coordinate rows of the elements over the union of their supports.
RationalMatrix coordinate_rows(const std::vector<SchurElement>& xs);

std::size_t exact_rank(const std::vector<SchurElement>& xs);

struct ChangeOfBasis {
  bool square = false;
  bool basis_independent = false;
  bool family_in_span = false;
  bool integral = false;
  std::size_t family_rank = 0;
  Integer determinant = 0;
  bool unimodular = false;
  RationalMatrix matrix;  // row t = coordinates of family[t] in basis
};

/// Expresses each member of family in coordinates of basis and reports
/// whether the change-of-basis matrix is integral with determinant +-1.
ChangeOfBasis unimodular_change(const std::vector<SchurElement>& family,
                                const std::vector<SchurElement>& basis);

}  // namespace schurlab
