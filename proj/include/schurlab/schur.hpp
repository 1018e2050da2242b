#pragma once

// The Schur algebra S(n, r) realized on tensor space. Basis elements xi_A
// are labelled by A in Theta(n, r); xi_A lies in 1_{row(A)} S 1_{col(A)}.

#include <map>
#include <vector>

#include "schurlab/combinatorics.hpp"
#include "schurlab/rational.hpp"
#include "schurlab/tensor.hpp"

namespace schurlab {

class SchurElement {
 public:
  SchurElement(int n, int r);
  static SchurElement basis(const MarginMatrix& a);

  int n() const { return n_; }
  int r() const { return r_; }
  const std::map<MarginMatrix, Rational>& terms() const { return terms_; }

  void add_term(const MarginMatrix& a, const Rational& c);
  Rational coefficient(const MarginMatrix& a) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;

  SchurElement& operator+=(const SchurElement& rhs);
  SchurElement& operator-=(const SchurElement& rhs);
  SchurElement& operator*=(const Rational& c);

  friend bool operator==(const SchurElement&, const SchurElement&) = default;

 private:
  void check_compatible(const SchurElement& rhs) const;

  int n_, r_;
  std::map<MarginMatrix, Rational> terms_;
};

SchurElement operator+(SchurElement a, const SchurElement& b);
SchurElement operator-(SchurElement a, const SchurElement& b);
SchurElement operator*(const Rational& c, SchurElement a);

/// The endomorphism sending e_k to the sum of e_l over pair_to_matrix(l, k) = A.
const TensorEndo& xi_endo(const MarginMatrix& a);
TensorEndo to_endo(const SchurElement& x);

/// Reads an equivariant endomorphism in the xi-basis. Throws
/// std::domain_error when x is not constant on diagonal orbits (x is not in
/// S(n, r)).
SchurElement decompose(const TensorEndo& x);

/// Size of the orbit of pairs labelled by A: r! / prod a_ij!.
std::size_t orbit_size(const MarginMatrix& a);

SchurElement schur_multiply(const SchurElement& x, const SchurElement& y);

SchurElement idempotent(const Weight& lambda);
SchurElement schur_identity(int n, int r);

/// [xi_A : A in margin_matrices(lambda, mu)]
std::vector<SchurElement> hom_basis(const Weight& lambda, const Weight& mu);

/// xi_A -> xi_{A^T}, extended linearly.
SchurElement involution(const SchurElement& x);

/// Relabels A -> (a_{w(i), w(j)}); w is given by its images w(1..n).
SchurElement weyl_relabel(const SchurElement& x, const std::vector<int>& w);
Weight permute_weight(const Weight& lambda, const std::vector<int>& w);

/// pi in Sigma_r <-> xi_{P_pi} in 1_omega S(r, r) 1_omega, where P_pi has
/// entries (pi(b), b) equal to one: e_i -> e_{pi o i} on the regular module.
class SymmetricGroupIso {
 public:
  explicit SymmetricGroupIso(int r);

  int r() const { return r_; }
  const std::vector<std::vector<int>>& elements() const { return perms_; }
  SchurElement image(const std::vector<int>& pi) const;
  /// Coordinates in the group basis; throws if x is not in 1_omega S 1_omega.
  std::map<std::vector<int>, Rational> preimage(const SchurElement& x) const;

  static std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b);

 private:
  int r_;
  std::vector<std::vector<int>> perms_;
};

SymmetricGroupIso symmetric_group_iso(int r);

}  // namespace schurlab
