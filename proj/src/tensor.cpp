#include "schurlab/tensor.hpp"

#include <stdexcept>
#include <string>

namespace schurlab {

std::uint64_t tensor_dimension(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("tensor space: need n >= 1, r >= 0");
  std::uint64_t dim = 1;
  for (int k = 0; k < r; ++k) {
    dim *= static_cast<std::uint64_t>(n);
    if (dim > kMaxTensorDimension)
      throw ResourceLimitError("tensor space too large: n^r = " + std::to_string(n) + "^" +
                               std::to_string(r) + " exceeds bound n^r <= " +
                               std::to_string(kMaxTensorDimension));
  }
  return dim;
}

TensorSpace::TensorSpace(int n, int r) : n_(n), r_(r), dim_(tensor_dimension(n, r)) {
  place_.assign(r, 1);
  for (int pos = r - 2; pos >= 0; --pos) place_[pos] = place_[pos + 1] * n;
}

TensorIndex TensorSpace::encode(const MultiIndex& i) const {
  if (static_cast<int>(i.length()) != r_ || i.n != n_)
    throw std::invalid_argument("tensor encode: word does not belong to I(n, r)");
  TensorIndex idx = 0;
  for (int x : i.letters) idx = idx * n_ + (x - 1);
  return idx;
}

MultiIndex TensorSpace::decode(TensorIndex idx) const {
  MultiIndex out{n_, std::vector<int>(r_)};
  for (int pos = r_ - 1; pos >= 0; --pos) {
    out.letters[pos] = static_cast<int>(idx % n_) + 1;
    idx /= n_;
  }
  return out;
}

int TensorSpace::letter(TensorIndex idx, int pos) const {
  return static_cast<int>((idx / place_[pos]) % n_) + 1;
}

TensorIndex TensorSpace::replace_letter(TensorIndex idx, int pos, int letter) const {
  int old = this->letter(idx, pos);
  return idx + static_cast<TensorIndex>(letter - old) * place_[pos];
}

Weight TensorSpace::weight(TensorIndex idx) const {
  std::vector<int> w(n_, 0);
  for (int pos = 0; pos < r_; ++pos) ++w[letter(idx, pos) - 1];
  return Weight(std::move(w));
}

void add_to(SparseVector& acc, const SparseVector& v, const Rational& scale) {
  for (const auto& [k, c] : v) {
    auto [it, inserted] = acc.try_emplace(k, 0);
    it->second += scale * c;
    if (it->second == 0) acc.erase(it);
  }
}

TensorEndo::TensorEndo(int n, int r) : n_(n), r_(r) { tensor_dimension(n, r); }

void TensorEndo::check_compatible(const TensorEndo& rhs) const {
  if (n_ != rhs.n_ || r_ != rhs.r_)
    throw std::invalid_argument("tensor endomorphisms act on different spaces");
}

void TensorEndo::add(TensorIndex row, TensorIndex col, const Rational& value) {
  if (value == 0) return;
  auto& column = cols_[col];
  auto [it, inserted] = column.try_emplace(row, 0);
  it->second += value;
  if (it->second == 0) {
    column.erase(it);
    if (column.empty()) cols_.erase(col);
  }
}

Rational TensorEndo::entry(TensorIndex row, TensorIndex col) const {
  auto c = cols_.find(col);
  if (c == cols_.end()) return 0;
  auto e = c->second.find(row);
  return e == c->second.end() ? Rational(0) : e->second;
}

void TensorEndo::set_column(TensorIndex col, SparseVector v) {
  if (v.empty())
    cols_.erase(col);
  else
    cols_[col] = std::move(v);
}

SparseVector TensorEndo::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [k, c] : v) {
    auto it = cols_.find(k);
    if (it != cols_.end()) add_to(out, it->second, c);
  }
  return out;
}

TensorEndo TensorEndo::compose(const TensorEndo& rhs) const {
  check_compatible(rhs);
  TensorEndo out(n_, r_);
  for (const auto& [k, col] : rhs.cols_) out.set_column(k, apply(col));
  return out;
}

std::size_t TensorEndo::nonzeros() const {
  std::size_t s = 0;
  for (const auto& [k, col] : cols_) s += col.size();
  return s;
}

TensorEndo& TensorEndo::operator+=(const TensorEndo& rhs) {
  check_compatible(rhs);
  for (const auto& [k, col] : rhs.cols_) {
    auto& mine = cols_[k];
    add_to(mine, col, 1);
    if (mine.empty()) cols_.erase(k);
  }
  return *this;
}

TensorEndo& TensorEndo::operator*=(const Rational& c) {
  if (c == 0) {
    cols_.clear();
    return *this;
  }
  for (auto& [k, col] : cols_)
    for (auto& [row, v] : col) v *= c;
  return *this;
}

TensorEndo operator+(TensorEndo a, const TensorEndo& b) { return a += b; }

TensorEndo operator-(TensorEndo a, const TensorEndo& b) {
  TensorEndo neg = b;
  neg *= -1;
  return a += neg;
}

TensorEndo operator*(const Rational& c, TensorEndo a) { return a *= c; }

TensorEndo identity_endo(int n, int r) {
  TensorSpace space(n, r);
  TensorEndo out(n, r);
  for (TensorIndex k = 0; k < space.dimension(); ++k) out.add(k, k, 1);
  return out;
}

TensorEndo truncate(const TensorEndo& x, const Weight& row_weight, const Weight& col_weight) {
  TensorSpace space(x.n(), x.r());
  TensorEndo out(x.n(), x.r());
  for (const auto& [k, col] : x.columns()) {
    if (space.weight(k) != col_weight) continue;
    SparseVector kept;
    for (const auto& [l, v] : col)
      if (space.weight(l) == row_weight) kept.emplace(l, v);
    out.set_column(k, std::move(kept));
  }
  return out;
}

}  // namespace schurlab
