#pragma once

// Indexing combinatorics: weights, multi-indices, margin matrices,
// semistandard tableaux, Kostka numbers and the dominance order.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace schurlab {

/// Integer vector of length n. A composition is a weight with nonnegative
/// entries; trailing zeros are significant.
class Weight {
 public:
  Weight() = default;
  Weight(std::initializer_list<int> entries) : entries_(entries) {}
  explicit Weight(std::vector<int> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  int degree() const;
  bool is_composition() const;
  bool is_partition() const;  // weakly decreasing and nonnegative

  std::string to_string() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<int> entries_;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);

/// All n-part compositions of r in reverse-lexicographic order.
std::vector<Weight> compositions(int n, int r);

/// Dominant members of compositions(n, r), same order.
std::vector<Weight> dominant_compositions(int n, int r);

/// A word (i_1, ..., i_r) with letters in {1..n}.
struct MultiIndex {
  int n = 1;
  std::vector<int> letters;

  std::size_t length() const { return letters.size(); }
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

MultiIndex make_multi_index(int n, std::vector<int> letters);
Weight weight_of(const MultiIndex& i);

enum class MatrixMode {
  nonnegative,   // members of Theta(n, r)
  off_diagonal,  // off-diagonal entries nonnegative, diagonal arbitrary
};

/// n x n integer matrix stored row-major. Ordering is lexicographic on the
/// row-major entries, which is the canonical basis order used everywhere.
class MarginMatrix {
 public:
  MarginMatrix() = default;
  MarginMatrix(int n, std::vector<int> entries,
               MatrixMode mode = MatrixMode::nonnegative);
  static MarginMatrix from_rows(const std::vector<std::vector<int>>& rows,
                                MatrixMode mode = MatrixMode::nonnegative);
  static MarginMatrix diagonal(const Weight& w);

  int n() const { return n_; }
  MatrixMode mode() const { return mode_; }
  int at(int i, int j) const { return entries_[i * n_ + j]; }
  const std::vector<int>& entries() const { return entries_; }
  std::vector<std::vector<int>> rows() const;

  int total() const;
  Weight row_sums() const;
  Weight col_sums() const;
  MarginMatrix transpose() const;
  bool is_diagonal() const;

  std::string to_string() const;

  friend std::strong_ordering operator<=>(const MarginMatrix& a,
                                          const MarginMatrix& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }
  friend bool operator==(const MarginMatrix& a, const MarginMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  int n_ = 0;
  MatrixMode mode_ = MatrixMode::nonnegative;
  std::vector<int> entries_;
};

/// All nonnegative matrices with row sums lambda and column sums mu, in
/// increasing row-major lexicographic order. Throws std::invalid_argument on
/// a degree or length mismatch.
std::vector<MarginMatrix> margin_matrices(const Weight& lambda, const Weight& mu);

/// All of Theta(n, r), ordered by (row sums, column sums) blocks as in
/// compositions(), each block in margin_matrices() order.
std::vector<MarginMatrix> theta(int n, int r);

/// The orbit invariant of (i, j) under the diagonal place-permutation action:
/// A_ab = #{k : i_k = a, j_k = b}.
MarginMatrix pair_to_matrix(const MultiIndex& i, const MultiIndex& j);

/// Representative pair reading A row-major, emitting a_ab copies of (a, b).
std::pair<MultiIndex, MultiIndex> canonical_pair(const MarginMatrix& a);

/// A filling of a Young diagram, stored row by row.
struct Tableau {
  std::vector<int> shape;
  std::vector<std::vector<int>> rows;

  std::vector<int> reading_word() const;
  Weight weight(int n) const;
  bool is_semistandard() const;

  friend auto operator<=>(const Tableau&, const Tableau&) = default;
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// The tableau obtained by writing the letters of i in order into the
/// diagram of shape nu.
Tableau tableau_of_word(const Weight& nu, const MultiIndex& i);

/// Semistandard tableaux of the given shape and weight, ordered by reading
/// word. Throws std::invalid_argument if shape is not a partition.
std::vector<Tableau> ssyt(const Weight& shape, const Weight& weight);

/// Number of semistandard tableaux of shape mu and weight lambda.
std::size_t kostka(const Weight& mu, const Weight& lambda);

/// Partial-sum comparison a <= b; requires equal length and degree.
bool dominance_leq(const Weight& a, const Weight& b);

/// Weakly decreasing rearrangement.
Weight sort_dominant(const Weight& lambda);

/// All permutations of {1..n} in lexicographic order, as image vectors.
std::vector<std::vector<int>> permutations(int n);

/// Number of words in I(n, r) with the given weight: r! / prod lambda_i!.
std::size_t multinomial(const Weight& lambda);

}  // namespace schurlab
