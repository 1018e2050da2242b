#pragma once

// U(gl_n) over Q in PBW normal form (f's, then H's, then e's), the
// representation on tensor space, and the divided-power bases of the
// integral Schur algebra.

#include <map>
#include <utility>
#include <vector>

#include "schurlab/combinatorics.hpp"
#include "schurlab/rational.hpp"
#include "schurlab/schur.hpp"
#include "schurlab/tensor.hpp"

namespace schurlab {

/// Generators are numbered by a global key: f_ij (i<j, lexicographic in
/// (i,j)), then H_1..H_n, then e_ij (i<j, lexicographic). A normal-form
/// monomial is the product of generators in increasing key order. The same
/// key order fixes the order of divided-power products everywhere.
int generator_count(int n);
int f_key(int n, int i, int j);  // f_ij = e_ji, 1-based, i < j
int h_key(int n, int i);
int e_key(int n, int i, int j);
/// Matrix unit (p, q), 1-based, of generator key g.
std::pair<int, int> matrix_unit_of_key(int n, int g);
int key_of_matrix_unit(int n, int p, int q);

class PBWMonomial {
 public:
  PBWMonomial() = default;
  explicit PBWMonomial(int n);
  PBWMonomial(int n, std::vector<int> exponents);

  int n() const { return n_; }
  const std::vector<int>& exponents() const { return exponents_; }
  int exponent(int key) const { return exponents_[key]; }
  int& exponent(int key) { return exponents_[key]; }

  int f(int i, int j) const { return exponents_[f_key(n_, i, j)]; }
  int h(int i) const { return exponents_[h_key(n_, i)]; }
  int e(int i, int j) const { return exponents_[e_key(n_, i, j)]; }

  int degree() const;
  bool is_one() const { return degree() == 0; }
  /// Largest key with a positive exponent, -1 for the unit.
  int max_key() const;
  /// Weight moved by the monomial: sum of exponents times (eps_p - eps_q).
  Weight weight() const;

  friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;

 private:
  int n_ = 0;
  std::vector<int> exponents_;
};

class UElement {
 public:
  explicit UElement(int n = 1);

  static UElement one(int n);
  static UElement monomial(const PBWMonomial& m, const Rational& c = 1);
  /// The matrix unit e_pq as an element of U (1-based).
  static UElement matrix_unit(int n, int p, int q);

  int n() const { return n_; }
  const std::map<PBWMonomial, Rational>& terms() const { return terms_; }
  void add_term(const PBWMonomial& m, const Rational& c);
  Rational coefficient(const PBWMonomial& m) const;
  bool is_zero() const { return terms_.empty(); }

  UElement& operator+=(const UElement& rhs);
  UElement& operator-=(const UElement& rhs);
  UElement& operator*=(const Rational& c);

  friend bool operator==(const UElement&, const UElement&) = default;

 private:
  void check_compatible(const UElement& rhs) const;

  int n_;
  std::map<PBWMonomial, Rational> terms_;
};

UElement operator+(UElement a, const UElement& b);
UElement operator-(UElement a, const UElement& b);
UElement operator*(const Rational& c, UElement a);

UElement e_elem(int n, int i, int j);  // e_ij, i < j
UElement f_elem(int n, int i, int j);  // f_ij = e_ji, i < j
UElement h_elem(int n, int i);
/// Chevalley generators e_i = e_{i,i+1}, f_i = e_{i+1,i}.
UElement e_simple(int n, int i);
UElement f_simple(int n, int i);

/// Product in normal form, by straightening with the matrix-unit bracket.
UElement u_multiply(const UElement& x, const UElement& y);
UElement u_power(const UElement& x, int k);

/// binom(H_i, b) = H_i (H_i - 1) ... (H_i - b + 1) / b!.
UElement h_binomial(int n, int i, int b);

enum class PBWSide { f_first, e_first };

/// prod f_ij^(a_ji) prod binom(H_i, b_i) prod e_ij^(a_ij) (f_first), or
/// the e-first analogue, for the off-diagonal part of a.
UElement divided_monomial(const MarginMatrix& a, const std::vector<int>& b, PBWSide side);

/// Coordinates in the basis f^(a) binom(H, b) e^(c), keyed by the monomial
/// with exponents (a, b, c).
struct IntegralityReport {
  std::map<PBWMonomial, Rational> coordinates;
  bool integral = true;
};
IntegralityReport integrality_coords(const UElement& u);

/// Image of u on E^{(x)r}; generators act as derivations.
TensorEndo d_rho(const UElement& u, int r);
/// Same, restricted to the columns of weight col_weight.
TensorEndo d_rho_block(const UElement& u, int r, const Weight& col_weight);

/// d_rho(prod binom(H_i, lambda_i)) equals the idempotent 1_lambda.
bool verify_idempotent_lemma(const Weight& lambda);

/// lambda^+(A)_j = a_jj + sum_{i<j}(a_ij + a_ji); lambda^-(A) with i > j.
Weight lambda_plus(const MarginMatrix& a);
Weight lambda_minus(const MarginMatrix& a);

enum class PBWForm {
  psa_a,   // F 1_{lambda^-} E
  psa_b,   // E 1_{lambda^+} F
  zbas_a,  // 1_row F E 1_col
  zbas_b,  // 1_row E F 1_col
};

/// Image in S(n, r) of the divided-power product attached to a.
SchurElement pbw_image(const MarginMatrix& a, PBWForm form);
std::vector<SchurElement> pbw_block(const Weight& lambda, const Weight& mu, PBWForm form);

}  // namespace schurlab
