#include "schurlab/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace schurlab {

IntegerMatrix clear_denominators(const RationalMatrix& m) {
  IntegerMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Integer l = 1;
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> irow;
    irow.reserve(row.size());
    for (const auto& q : row) irow.push_back(Integer(q.get_num() * (l / q.get_den())));
    out.push_back(std::move(irow));
  }
  return out;
}

std::size_t rank(const IntegerMatrix& input) {
  IntegerMatrix m = input;
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::size_t rank(const RationalMatrix& m) { return rank(clear_denominators(m)); }

Integer determinant(const IntegerMatrix& input) {
  IntegerMatrix m = input;
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::optional<RationalMatrix> inverse(const RationalMatrix& input) {
  const std::size_t n = input.size();
  RationalMatrix a = input;
  RationalMatrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("inverse: matrix is not square");
    inv[i][i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

bool spans_integer_lattice(const IntegerMatrix& input, std::size_t dim) {
  IntegerMatrix m = input;
  for (const auto& row : m)
    if (row.size() != dim) throw std::invalid_argument("lattice rows have the wrong length");
  std::size_t top = 0;
  for (std::size_t c = 0; c < dim; ++c) {
    // Euclid on column c among rows top.. until a single nonzero remains.
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = top; i < m.size(); ++i)
        if (m[i][c] != 0 && (best == m.size() || abs(m[i][c]) < abs(m[best][c]))) best = i;
      if (best == m.size()) return false;
      std::swap(m[best], m[top]);
      bool done = true;
      for (std::size_t i = top + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[top][c].get_mpz_t());
        for (std::size_t j = c; j < dim; ++j) m[i][j] -= q * m[top][j];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (abs(m[top][c]) != 1) return false;
    ++top;
  }
  return true;
}

RationalMatrix coordinate_rows(const std::vector<SchurElement>& xs) {
  std::set<MarginMatrix> labels;
  for (const auto& x : xs)
    for (const auto& [a, c] : x.terms()) labels.insert(a);
  std::vector<MarginMatrix> order(labels.begin(), labels.end());
  RationalMatrix out;
  for (const auto& x : xs) {
    std::vector<Rational> row(order.size(), 0);
    for (std::size_t t = 0; t < order.size(); ++t) row[t] = x.coefficient(order[t]);
    out.push_back(std::move(row));
  }
  return out;
}

std::size_t exact_rank(const std::vector<SchurElement>& xs) {
  for (std::size_t t = 1; t < xs.size(); ++t)
    if (xs[t].n() != xs[0].n() || xs[t].r() != xs[0].r())
      throw std::invalid_argument("exact_rank: elements of different Schur algebras");
  return rank(coordinate_rows(xs));
}

BasisCoordinates::BasisCoordinates(const std::vector<SchurElement>& basis)
    : size_(basis.size()), basis_(basis) {
  if (basis.empty()) return;
  std::set<MarginMatrix> label_set;
  for (const auto& x : basis)
    for (const auto& [a, c] : x.terms()) label_set.insert(a);
  std::vector<MarginMatrix> labels(label_set.begin(), label_set.end());
  RationalMatrix rows = coordinate_rows(basis);

  // Pivot columns of an echelon form select an invertible square minor.
  RationalMatrix ech = rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < labels.size() && r < ech.size(); ++c) {
    std::size_t p = r;
    while (p < ech.size() && ech[p][c] == 0) ++p;
    if (p == ech.size()) continue;
    std::swap(ech[p], ech[r]);
    for (std::size_t i = r + 1; i < ech.size(); ++i) {
      if (ech[i][c] == 0) continue;
      Rational f = ech[i][c] / ech[r][c];
      for (std::size_t j = c; j < labels.size(); ++j) ech[i][j] -= f * ech[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  if (r != basis.size())
    throw std::invalid_argument("BasisCoordinates: family is linearly dependent");

  RationalMatrix square(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) square[i][j] = rows[i][pivot_cols[j]];
  pivot_inverse_ = *inverse(square);
  for (auto c : pivot_cols) pivots_.push_back(labels[c]);
}

std::optional<std::vector<Rational>> BasisCoordinates::coordinates(const SchurElement& x) const {
  std::vector<Rational> coords(size_, 0);
  // x_piv = c * B_piv  =>  c = x_piv * B_piv^-1
  for (std::size_t j = 0; j < size_; ++j) {
    Rational xv = x.coefficient(pivots_[j]);
    if (xv == 0) continue;
    for (std::size_t i = 0; i < size_; ++i) coords[i] += xv * pivot_inverse_[j][i];
  }
  SchurElement rebuilt(x.n(), x.r());
  for (std::size_t i = 0; i < size_; ++i)
    if (coords[i] != 0) rebuilt += coords[i] * basis_[i];
  if (!(rebuilt == x)) return std::nullopt;
  return coords;
}

ChangeOfBasis unimodular_change(const std::vector<SchurElement>& family,
                                const std::vector<SchurElement>& basis) {
  ChangeOfBasis out;
  out.square = family.size() == basis.size();
  out.basis_independent = exact_rank(basis) == basis.size();
  if (!out.basis_independent) return out;
  BasisCoordinates coords(basis);
  out.family_in_span = true;
  out.integral = true;
  for (const auto& x : family) {
    auto c = coords.coordinates(x);
    if (!c) {
      out.family_in_span = false;
      out.integral = false;
      return out;
    }
    for (const auto& v : *c)
      if (!is_integral(v)) out.integral = false;
    out.matrix.push_back(std::move(*c));
  }
  out.family_rank = rank(out.matrix);
  if (out.square && out.integral) {
    IntegerMatrix im;
    for (const auto& row : out.matrix) {
      std::vector<Integer> irow;
      for (const auto& v : row) irow.push_back(v.get_num());
      im.push_back(std::move(irow));
    }
    out.determinant = determinant(im);
    out.unimodular = abs(out.determinant) == 1;
  }
  return out;
}

}  // namespace schurlab
