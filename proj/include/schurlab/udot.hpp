#pragma once

// The modified form U-dot of U(gl_n): elements 1_lambda x 1_mu stored in
// the divided-power basis 1_lambda prod f^(a_ji) prod e^(a_ij) 1_mu, the
// quotient maps to Schur algebras, and the gl_2 generic algebra.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schurlab/combinatorics.hpp"
#include "schurlab/pbw.hpp"
#include "schurlab/rational.hpp"
#include "schurlab/schur.hpp"

namespace schurlab {

/// Off-diagonal exponents a_pq >= 0 of the matrix units e_pq; the diagonal
/// is always zero. f_ij = e_ji carries exponent a_ji.
using ExponentPattern = MarginMatrix;

ExponentPattern make_pattern(int n, const std::vector<int>& entries);
int pattern_degree(const ExponentPattern& a);
/// sum a_pq (eps_p - eps_q)
Weight pattern_weight(const ExponentPattern& a);

class UdotElement {
 public:
  UdotElement(Weight left, Weight right);

  static UdotElement idempotent(const Weight& lambda);
  /// 1_lambda prod f^(a_ji) prod e^(a_ij) 1_mu with lambda = mu + weight(a).
  static UdotElement basis(const ExponentPattern& a, const Weight& mu);

  int n() const { return static_cast<int>(left_.size()); }
  const Weight& left() const { return left_; }
  const Weight& right() const { return right_; }
  const std::map<ExponentPattern, Rational>& terms() const { return terms_; }

  /// Throws std::invalid_argument if a violates the weight constraint.
  void add_term(const ExponentPattern& a, const Rational& c);
  Rational coefficient(const ExponentPattern& a) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;

  UdotElement& operator+=(const UdotElement& rhs);
  UdotElement& operator-=(const UdotElement& rhs);
  UdotElement& operator*=(const Rational& c);

  friend bool operator==(const UdotElement&, const UdotElement&) = default;

 private:
  void check_compatible(const UdotElement& rhs) const;

  Weight left_, right_;
  std::map<ExponentPattern, Rational> terms_;
};

UdotElement operator+(UdotElement a, const UdotElement& b);
UdotElement operator-(UdotElement a, const UdotElement& b);
UdotElement operator*(const Rational& c, UdotElement a);

/// True iff lambda - mu lies in the root lattice (entries sum to zero).
bool in_root_lattice(const Weight& lambda, const Weight& mu);

/// Patterns of degree <= d compatible with (lambda, mu), ordered by degree
/// then lexicographically. Empty when lambda - mu is not in the root lattice.
std::vector<ExponentPattern> udot_patterns(const Weight& lambda, const Weight& mu, int d);
std::vector<UdotElement> udot_basis_upto(const Weight& lambda, const Weight& mu, int d);

/// The e-first elements 1_lambda prod e^(a_ij) prod f^(a_ji) 1_mu, written
/// in the f-first basis.
UdotElement udot_basis_b(const ExponentPattern& a, const Weight& mu);
std::vector<UdotElement> udot_basis_b_upto(const Weight& lambda, const Weight& mu, int d);

/// The f-first divided-power product of a, as an element of U.
UElement lift_pattern(const ExponentPattern& a);
UElement lift(const UdotElement& u);

/// pi_{lambda,mu}(x): H's are evaluated against mu after commuting past the
/// e-part; terms of the wrong weight vanish.
UdotElement udot_project(const UElement& x, const Weight& lambda, const Weight& mu);

/// Zero when u.right() != v.left().
UdotElement udot_multiply(const UdotElement& u, const UdotElement& v);

enum class GeneratorSide { e, f };
/// e_i^(a) 1_lambda or f_i^(a) 1_lambda.
UdotElement divided_generator(int i, int a, const Weight& lambda, GeneratorSide side);

/// 1_lambda d_rho(lift(u)) 1_mu in the xi-basis of S(n, r); zero when the
/// weights are not in Lambda(n, r).
SchurElement psi(const UdotElement& u, int r);

/// (lambda_1 - lambda_2, ..., lambda_{n-1} - lambda_n)
std::vector<int> weight_tilde(const Weight& lambda);
/// Adds k(1, ..., 1) to both weights.
UdotElement shift(const UdotElement& u, int k);

/// Image under the automorphism induced by w e_ij = e_{w^-1(i), w^-1(j)};
/// 1_lambda goes to 1_{w lambda} with (w lambda)_i = lambda_{w(i)}.
UdotElement udot_weyl_relabel(const UdotElement& u, const std::vector<int>& w);

struct RelationCheck {
  Weight lambda;
  int i = 0, j = 0;
  UdotElement commutator;  // (e_i f_j - f_j e_i) 1_lambda
  bool pairing_holds = false;  // = delta_ij (lambda_i - lambda_{i+1}) 1_lambda
  bool literal_holds = false;  // = delta_ij lambda_i 1_lambda
  bool idempotent_moves = false;  // e_i 1_lambda = 1_{lambda+alpha_i} e_i, same for f
};

/// All weights with entries in [-window, window], all 1 <= i, j < n.
std::vector<RelationCheck> commutator_relations(int n, int window);

/// gl_2: b_a = 1_lambda f^(a) e^(a) 1_lambda.
struct Gl2Table {
  Weight lambda;
  int degree = 0;
  std::map<std::pair<int, int>, std::map<int, Rational>> products;  // b_a b_c
  bool unit = false;
  bool commutative = false;
  bool generated_by_b1 = false;  // b_1^k, k <= degree, span b_0..b_degree
  bool integral = false;
};
Gl2Table gl2_generic_table(const Weight& lambda, int d);

struct SymmetricQuotientReport {
  int r = 0;
  std::size_t rank = 0;
  std::size_t expected_rank = 0;  // r!
  bool integer_surjective = false;
  bool multiplicative = false;
  bool group_table = false;  // S(omega) multiplication matches Z Sigma_r
  std::vector<std::string> witnesses;

  bool passed() const {
    return rank == expected_rank && integer_surjective && multiplicative && group_table;
  }
};
/// psi on the weight-omega part of U-dot for n = r. Throws
/// ResourceLimitError for r > 4.
SymmetricQuotientReport u0_symmetric_group(int r);

}  // namespace schurlab
