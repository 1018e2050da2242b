#pragma once

// Sparse endomorphisms of tensor space E^{(x)r}, dim E = n.
//
// Basis tensors e_i are encoded by their word i read as a base-n number
// (first letter most significant), so index order is lexicographic order
// of words.

#include <cstdint>
#include <map>

#include "schurlab/combinatorics.hpp"
#include "schurlab/rational.hpp"

namespace schurlab {

using TensorIndex = std::uint64_t;
using SparseVector = std::map<TensorIndex, Rational>;

inline constexpr std::uint64_t kMaxTensorDimension = 1'000'000;

/// Throws ResourceLimitError when n^r exceeds kMaxTensorDimension.
std::uint64_t tensor_dimension(int n, int r);

class TensorSpace {
 public:
  TensorSpace(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  std::uint64_t dimension() const { return dim_; }

  TensorIndex encode(const MultiIndex& i) const;
  MultiIndex decode(TensorIndex idx) const;
  /// Letter (1-based) at position pos of the word encoded by idx.
  int letter(TensorIndex idx, int pos) const;
  TensorIndex replace_letter(TensorIndex idx, int pos, int letter) const;
  Weight weight(TensorIndex idx) const;

 private:
  int n_, r_;
  std::uint64_t dim_;
  std::vector<std::uint64_t> place_;  // n^(r-1-pos)
};

/// Column-sparse matrix: columns()[k] is the image of e_k.
class TensorEndo {
 public:
  TensorEndo(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }

  void add(TensorIndex row, TensorIndex col, const Rational& value);
  Rational entry(TensorIndex row, TensorIndex col) const;
  const std::map<TensorIndex, SparseVector>& columns() const { return cols_; }
  void set_column(TensorIndex col, SparseVector v);

  SparseVector apply(const SparseVector& v) const;
  /// this o rhs
  TensorEndo compose(const TensorEndo& rhs) const;

  std::size_t nonzeros() const;
  bool is_zero() const { return cols_.empty(); }

  TensorEndo& operator+=(const TensorEndo& rhs);
  TensorEndo& operator*=(const Rational& c);

  friend bool operator==(const TensorEndo&, const TensorEndo&) = default;

 private:
  void check_compatible(const TensorEndo& rhs) const;

  int n_, r_;
  std::map<TensorIndex, SparseVector> cols_;
};

TensorEndo operator+(TensorEndo a, const TensorEndo& b);
TensorEndo operator-(TensorEndo a, const TensorEndo& b);
TensorEndo operator*(const Rational& c, TensorEndo a);

TensorEndo identity_endo(int n, int r);

/// Keeps only entries (l, k) with weight(l) = row_weight and
/// weight(k) = col_weight: 1_row X 1_col.
TensorEndo truncate(const TensorEndo& x, const Weight& row_weight, const Weight& col_weight);

void add_to(SparseVector& acc, const SparseVector& v, const Rational& scale);

}  // namespace schurlab
