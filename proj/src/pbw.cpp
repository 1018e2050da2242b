#include "schurlab/pbw.hpp"

#include <stdexcept>

namespace schurlab {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

// Position of (i, j), i < j, in the lexicographic list of such pairs.
int pair_index(int n, int i, int j) {
  if (i < 1 || j > n || i >= j) throw std::invalid_argument("need 1 <= i < j <= n");
  int idx = 0;
  for (int k = 1; k < i; ++k) idx += n - k;
  return idx + (j - i - 1);
}

std::pair<int, int> pair_at(int n, int idx) {
  for (int i = 1; i < n; ++i) {
    if (idx < n - i) return {i, i + 1 + idx};
    idx -= n - i;
  }
  throw std::out_of_range("pair index out of range");
}

}  // namespace

int generator_count(int n) { return n * n; }
int f_key(int n, int i, int j) { return pair_index(n, i, j); }
int h_key(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("H index out of range");
  return pair_count(n) + i - 1;
}
int e_key(int n, int i, int j) { return pair_count(n) + n + pair_index(n, i, j); }

std::pair<int, int> matrix_unit_of_key(int n, int g) {
  const int m = pair_count(n);
  if (g < 0 || g >= n * n) throw std::out_of_range("generator key out of range");
  if (g < m) {
    auto [i, j] = pair_at(n, g);
    return {j, i};
  }
  if (g < m + n) return {g - m + 1, g - m + 1};
  return pair_at(n, g - m - n);
}

int key_of_matrix_unit(int n, int p, int q) {
  if (p == q) return h_key(n, p);
  return p > q ? f_key(n, q, p) : e_key(n, p, q);
}

PBWMonomial::PBWMonomial(int n) : n_(n), exponents_(generator_count(n), 0) {
  if (n < 1) throw std::invalid_argument("PBW monomial: need n >= 1");
}

PBWMonomial::PBWMonomial(int n, std::vector<int> exponents)
    : n_(n), exponents_(std::move(exponents)) {
  if (n < 1 || static_cast<int>(exponents_.size()) != generator_count(n))
    throw std::invalid_argument("PBW monomial: expected n^2 exponents");
  for (int x : exponents_)
    if (x < 0) throw std::invalid_argument("PBW monomial: negative exponent");
}

int PBWMonomial::degree() const {
  int d = 0;
  for (int x : exponents_) d += x;
  return d;
}

int PBWMonomial::max_key() const {
  for (int g = static_cast<int>(exponents_.size()) - 1; g >= 0; --g)
    if (exponents_[g] > 0) return g;
  return -1;
}

Weight PBWMonomial::weight() const {
  std::vector<int> w(n_, 0);
  for (int g = 0; g < static_cast<int>(exponents_.size()); ++g) {
    auto [p, q] = matrix_unit_of_key(n_, g);
    w[p - 1] += exponents_[g];
    w[q - 1] -= exponents_[g];
  }
  return Weight(std::move(w));
}

UElement::UElement(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("U element: need n >= 1");
}

UElement UElement::one(int n) { return monomial(PBWMonomial(n)); }

UElement UElement::monomial(const PBWMonomial& m, const Rational& c) {
  UElement out(m.n());
  out.add_term(m, c);
  return out;
}

UElement UElement::matrix_unit(int n, int p, int q) {
  PBWMonomial m(n);
  ++m.exponent(key_of_matrix_unit(n, p, q));
  return monomial(m);
}

void UElement::check_compatible(const UElement& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("U elements for different n");
}

void UElement::add_term(const PBWMonomial& m, const Rational& c) {
  if (m.n() != n_) throw std::invalid_argument("monomial for a different n");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, 0);
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational UElement::coefficient(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

UElement& UElement::operator+=(const UElement& rhs) {
  check_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

UElement& UElement::operator-=(const UElement& rhs) {
  check_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

UElement& UElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

UElement operator+(UElement a, const UElement& b) { return a += b; }
UElement operator-(UElement a, const UElement& b) { return a -= b; }
UElement operator*(const Rational& c, UElement a) { return a *= c; }

UElement e_elem(int n, int i, int j) {
  if (i >= j) throw std::invalid_argument("e_ij needs i < j");
  return UElement::matrix_unit(n, i, j);
}
UElement f_elem(int n, int i, int j) {
  if (i >= j) throw std::invalid_argument("f_ij needs i < j");
  return UElement::matrix_unit(n, j, i);
}
UElement h_elem(int n, int i) { return UElement::matrix_unit(n, i, i); }
UElement e_simple(int n, int i) { return e_elem(n, i, i + 1); }
UElement f_simple(int n, int i) { return f_elem(n, i, i + 1); }

namespace {

// [e_ab, e_cd] = delta_bc e_ad - delta_da e_cb, as (key, coeff) pairs.
std::vector<std::pair<int, int>> bracket(int n, int y, int g) {
  auto [a, b] = matrix_unit_of_key(n, y);
  auto [c, d] = matrix_unit_of_key(n, g);
  std::vector<std::pair<int, int>> out;
  if (b == c) out.emplace_back(key_of_matrix_unit(n, a, d), 1);
  if (d == a) out.emplace_back(key_of_matrix_unit(n, c, b), -1);
  if (out.size() == 2 && out[0].first == out[1].first) out.clear();
  return out;
}

// M * g in normal form. With M = M' y and y > g:
// M' y g = (M' g) y + M' [y, g].
const UElement& rmul(const PBWMonomial& m, int g) {
  thread_local std::map<std::pair<PBWMonomial, int>, UElement> cache;
  auto key = std::make_pair(m, g);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const int n = m.n();
  UElement out(n);
  int y = m.max_key();
  if (y <= g) {
    PBWMonomial next = m;
    ++next.exponent(g);
    out.add_term(next, 1);
  } else {
    PBWMonomial rest = m;
    --rest.exponent(y);
    UElement moved = rmul(rest, g);
    for (const auto& [t, c] : moved.terms()) {
      UElement prod = rmul(t, y);
      prod *= c;
      out += prod;
    }
    for (auto [k, c] : bracket(n, y, g)) {
      UElement prod = rmul(rest, k);
      prod *= c;
      out += prod;
    }
  }
  return cache.emplace(key, std::move(out)).first->second;
}

UElement multiply_by_generator(const UElement& x, int g) {
  UElement out(x.n());
  for (const auto& [m, c] : x.terms()) {
    UElement prod = rmul(m, g);
    prod *= c;
    out += prod;
  }
  return out;
}

}  // namespace

UElement u_multiply(const UElement& x, const UElement& y) {
  if (x.n() != y.n()) throw std::invalid_argument("u_multiply: n mismatch");
  const int n = x.n();
  UElement out(n);
  for (const auto& [m, c] : y.terms()) {
    UElement cur = x;
    for (int g = 0; g < generator_count(n); ++g)
      for (int t = 0; t < m.exponent(g); ++t) cur = multiply_by_generator(cur, g);
    cur *= c;
    out += cur;
  }
  return out;
}

UElement u_power(const UElement& x, int k) {
  if (k < 0) throw std::invalid_argument("u_power: negative exponent");
  UElement out = UElement::one(x.n());
  for (int t = 0; t < k; ++t) out = u_multiply(out, x);
  return out;
}

UElement h_binomial(int n, int i, int b) {
  if (b < 0) throw std::invalid_argument("h_binomial: negative b");
  // Coefficients of x(x-1)...(x-b+1) in powers of x.
  std::vector<Integer> poly{1};
  for (int t = 0; t < b; ++t) {
    std::vector<Integer> next(poly.size() + 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= t * poly[k];
    }
    poly = std::move(next);
  }
  Rational scale(1, 1);
  scale /= Rational(factorial(b));
  UElement out(n);
  for (std::size_t k = 0; k < poly.size(); ++k) {
    PBWMonomial m(n);
    m.exponent(h_key(n, i)) = static_cast<int>(k);
    out.add_term(m, scale * Rational(poly[k]));
  }
  return out;
}

namespace {

UElement divided_part(const MarginMatrix& a, bool lower) {
  const int n = a.n();
  PBWMonomial m(n);
  Integer denom = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int x = lower ? a.at(j - 1, i - 1) : a.at(i - 1, j - 1);
      if (x < 0) throw std::invalid_argument("divided power with negative exponent");
      m.exponent(lower ? f_key(n, i, j) : e_key(n, i, j)) = x;
      denom *= factorial(x);
    }
  return UElement::monomial(m, Rational(1) / Rational(denom));
}

}  // namespace

UElement divided_monomial(const MarginMatrix& a, const std::vector<int>& b, PBWSide side) {
  const int n = a.n();
  if (static_cast<int>(b.size()) != n)
    throw std::invalid_argument("divided_monomial: H exponents have the wrong length");
  UElement f = divided_part(a, true);
  UElement e = divided_part(a, false);
  UElement h = UElement::one(n);
  for (int i = 1; i <= n; ++i) h = u_multiply(h, h_binomial(n, i, b[i - 1]));
  if (side == PBWSide::f_first) return u_multiply(u_multiply(f, h), e);
  return u_multiply(u_multiply(e, h), f);
}

IntegralityReport integrality_coords(const UElement& u) {
  const int n = u.n();
  // x^k = sum_j S(k, j) j! binom(x, j), S = Stirling numbers of the 2nd kind.
  auto stirling_row = [](int k) {
    std::vector<std::vector<Integer>> s(k + 1, std::vector<Integer>(k + 1, 0));
    s[0][0] = 1;
    for (int a = 1; a <= k; ++a)
      for (int j = 1; j <= a; ++j) s[a][j] = j * s[a - 1][j] + s[a - 1][j - 1];
    std::vector<Integer> out(k + 1);
    for (int j = 0; j <= k; ++j) out[j] = s[k][j] * factorial(j);
    return out;
  };
  IntegralityReport report;
  const int m = pair_count(n);
  for (const auto& [mono, c] : u.terms()) {
    Rational scale = c;
    for (int g = 0; g < generator_count(n); ++g)
      if (g < m || g >= m + n) scale *= Rational(factorial(mono.exponent(g)));
    std::map<PBWMonomial, Rational> partial{{mono, scale}};
    for (int i = 1; i <= n; ++i) {
      int key = h_key(n, i);
      auto row = stirling_row(mono.exponent(key));
      std::map<PBWMonomial, Rational> next;
      for (const auto& [p, v] : partial)
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (row[j] == 0) continue;
          PBWMonomial q = p;
          q.exponent(key) = static_cast<int>(j);
          next[q] += v * Rational(row[j]);
        }
      partial = std::move(next);
    }
    for (const auto& [p, v] : partial) report.coordinates[p] += v;
  }
  for (auto it = report.coordinates.begin(); it != report.coordinates.end();) {
    if (it->second == 0) {
      it = report.coordinates.erase(it);
      continue;
    }
    if (!is_integral(it->second)) report.integral = false;
    ++it;
  }
  return report;
}

namespace {

SparseVector apply_matrix_unit(const TensorSpace& space, int p, int q, const SparseVector& v) {
  SparseVector out;
  for (const auto& [idx, c] : v)
    for (int pos = 0; pos < space.r(); ++pos) {
      if (space.letter(idx, pos) != q) continue;
      TensorIndex target = p == q ? idx : space.replace_letter(idx, pos, p);
      auto [it, inserted] = out.try_emplace(target, 0);
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  return out;
}

TensorEndo d_rho_columns(const UElement& u, int r, const Weight* col_weight) {
  const int n = u.n();
  TensorSpace space(n, r);
  TensorEndo out(n, r);
  for (TensorIndex k = 0; k < space.dimension(); ++k) {
    if (col_weight && space.weight(k) != *col_weight) continue;
    SparseVector column;
    for (const auto& [m, c] : u.terms()) {
      SparseVector v{{k, Rational(1)}};
      // Rightmost factor acts first.
      for (int g = generator_count(n) - 1; g >= 0 && !v.empty(); --g) {
        auto [p, q] = matrix_unit_of_key(n, g);
        for (int t = 0; t < m.exponent(g) && !v.empty(); ++t)
          v = apply_matrix_unit(space, p, q, v);
      }
      add_to(column, v, c);
    }
    out.set_column(k, std::move(column));
  }
  return out;
}

}  // namespace

TensorEndo d_rho(const UElement& u, int r) { return d_rho_columns(u, r, nullptr); }

TensorEndo d_rho_block(const UElement& u, int r, const Weight& col_weight) {
  if (static_cast<int>(col_weight.size()) != u.n())
    throw std::invalid_argument("d_rho_block: weight length differs from n");
  return d_rho_columns(u, r, &col_weight);
}

bool verify_idempotent_lemma(const Weight& lambda) {
  if (!lambda.is_composition())
    throw std::invalid_argument("verify_idempotent_lemma: " + lambda.to_string() +
                                " is not a composition");
  const int n = static_cast<int>(lambda.size());
  UElement h = UElement::one(n);
  for (int i = 1; i <= n; ++i) h = u_multiply(h, h_binomial(n, i, lambda[i - 1]));
  return d_rho(h, lambda.degree()) == to_endo(idempotent(lambda));
}

Weight lambda_plus(const MarginMatrix& a) {
  std::vector<int> out(a.n());
  for (int j = 0; j < a.n(); ++j) {
    out[j] = a.at(j, j);
    for (int i = 0; i < j; ++i) out[j] += a.at(i, j) + a.at(j, i);
  }
  return Weight(std::move(out));
}

Weight lambda_minus(const MarginMatrix& a) {
  std::vector<int> out(a.n());
  for (int j = 0; j < a.n(); ++j) {
    out[j] = a.at(j, j);
    for (int i = j + 1; i < a.n(); ++i) out[j] += a.at(i, j) + a.at(j, i);
  }
  return Weight(std::move(out));
}

SchurElement pbw_image(const MarginMatrix& a, PBWForm form) {
  if (a.mode() != MatrixMode::nonnegative)
    throw std::invalid_argument("pbw_image: " + a.to_string() + " is not in Theta(n, r)");
  const int r = a.total();
  UElement f = divided_part(a, true);
  UElement e = divided_part(a, false);
  switch (form) {
    case PBWForm::zbas_a:
      return decompose(
          truncate(d_rho_block(u_multiply(f, e), r, a.col_sums()), a.row_sums(), a.col_sums()));
    case PBWForm::zbas_b:
      return decompose(
          truncate(d_rho_block(u_multiply(e, f), r, a.col_sums()), a.row_sums(), a.col_sums()));
    case PBWForm::psa_a:
      return decompose(
          d_rho(f, r).compose(to_endo(idempotent(lambda_minus(a))).compose(d_rho(e, r))));
    case PBWForm::psa_b:
      return decompose(
          d_rho(e, r).compose(to_endo(idempotent(lambda_plus(a))).compose(d_rho(f, r))));
  }
  throw std::logic_error("pbw_image: unknown form");
}

std::vector<SchurElement> pbw_block(const Weight& lambda, const Weight& mu, PBWForm form) {
  std::vector<SchurElement> out;
  for (const auto& a : margin_matrices(lambda, mu)) out.push_back(pbw_image(a, form));
  return out;
}

}  // namespace schurlab
