#include "schurlab/schur.hpp"

#include <functional>
#include <stdexcept>

namespace schurlab {

SchurElement::SchurElement(int n, int r) : n_(n), r_(r) {
  if (n < 1 || r < 0) throw std::invalid_argument("Schur element: need n >= 1, r >= 0");
}

SchurElement SchurElement::basis(const MarginMatrix& a) {
  if (a.mode() != MatrixMode::nonnegative)
    throw std::invalid_argument("xi-basis labels must lie in Theta(n, r)");
  SchurElement x(a.n(), a.total());
  x.add_term(a, 1);
  return x;
}

void SchurElement::check_compatible(const SchurElement& rhs) const {
  if (n_ != rhs.n_ || r_ != rhs.r_)
    throw std::invalid_argument("Schur elements belong to different algebras S(" +
                                std::to_string(n_) + "," + std::to_string(r_) + ") and S(" +
                                std::to_string(rhs.n_) + "," + std::to_string(rhs.r_) + ")");
}

void SchurElement::add_term(const MarginMatrix& a, const Rational& c) {
  if (a.n() != n_ || a.total() != r_)
    throw std::invalid_argument("matrix " + a.to_string() + " is not in Theta(" +
                                std::to_string(n_) + "," + std::to_string(r_) + ")");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, 0);
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational SchurElement::coefficient(const MarginMatrix& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool SchurElement::is_integral() const {
  for (const auto& [a, c] : terms_)
    if (!schurlab::is_integral(c)) return false;
  return true;
}

SchurElement& SchurElement::operator+=(const SchurElement& rhs) {
  check_compatible(rhs);
  for (const auto& [a, c] : rhs.terms_) add_term(a, c);
  return *this;
}

SchurElement& SchurElement::operator-=(const SchurElement& rhs) {
  check_compatible(rhs);
  for (const auto& [a, c] : rhs.terms_) add_term(a, -c);
  return *this;
}

SchurElement& SchurElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, v] : terms_) v *= c;
  return *this;
}

SchurElement operator+(SchurElement a, const SchurElement& b) { return a += b; }
SchurElement operator-(SchurElement a, const SchurElement& b) { return a -= b; }
SchurElement operator*(const Rational& c, SchurElement a) { return a *= c; }

namespace {

// Words of the given weight, as tensor indices.
std::vector<TensorIndex> words_of_weight(const TensorSpace& space, const Weight& w) {
  std::vector<TensorIndex> out;
  std::vector<int> left(w.begin(), w.end());
  std::function<void(int, TensorIndex)> rec = [&](int pos, TensorIndex acc) {
    if (pos == space.r()) {
      out.push_back(acc);
      return;
    }
    for (int a = 0; a < space.n(); ++a) {
      if (left[a] == 0) continue;
      --left[a];
      rec(pos + 1, acc * space.n() + a);
      ++left[a];
    }
  };
  rec(0, 0);
  return out;
}

TensorEndo build_xi_endo(const MarginMatrix& a) {
  const int n = a.n(), r = a.total();
  TensorSpace space(n, r);
  TensorEndo out(n, r);
  // remaining[p][q]: how many more positions t with k_t = q may get l_t = p.
  std::vector<int> remaining = a.entries();
  std::vector<int> k_letters(r);
  std::function<void(int, TensorIndex, TensorIndex)> rec = [&](int pos, TensorIndex l,
                                                              TensorIndex k) {
    if (pos == r) {
      out.add(l, k, 1);
      return;
    }
    int q = k_letters[pos];
    for (int p = 0; p < n; ++p) {
      int& slot = remaining[p * n + q];
      if (slot == 0) continue;
      --slot;
      rec(pos + 1, l * n + p, k);
      ++slot;
    }
  };
  for (TensorIndex k : words_of_weight(space, a.col_sums())) {
    for (int pos = 0; pos < r; ++pos) k_letters[pos] = space.letter(k, pos) - 1;
    rec(0, 0, k);
  }
  return out;
}

}  // namespace

const TensorEndo& xi_endo(const MarginMatrix& a) {
  if (a.mode() != MatrixMode::nonnegative)
    throw std::invalid_argument("xi_endo: matrix must lie in Theta(n, r)");
  thread_local std::map<MarginMatrix, TensorEndo> cache;
  auto it = cache.find(a);
  if (it == cache.end()) it = cache.emplace(a, build_xi_endo(a)).first;
  return it->second;
}

TensorEndo to_endo(const SchurElement& x) {
  TensorEndo out(x.n(), x.r());
  for (const auto& [a, c] : x.terms()) {
    TensorEndo scaled = xi_endo(a);
    scaled *= c;
    out += scaled;
  }
  return out;
}

std::size_t orbit_size(const MarginMatrix& a) {
  return multinomial(Weight(a.entries()));
}

SchurElement decompose(const TensorEndo& x) {
  TensorSpace space(x.n(), x.r());
  const int n = x.n(), r = x.r();
  struct Seen {
    Rational value;
    std::size_t count = 0;
  };
  std::map<MarginMatrix, Seen> orbits;
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (const auto& [k, col] : x.columns()) {
    for (const auto& [l, v] : col) {
      std::fill(cells.begin(), cells.end(), 0);
      for (int pos = 0; pos < r; ++pos)
        ++cells[(space.letter(l, pos) - 1) * n + (space.letter(k, pos) - 1)];
      MarginMatrix label(n, cells);
      auto [it, inserted] = orbits.try_emplace(label);
      if (inserted) {
        it->second.value = v;
      } else if (it->second.value != v) {
        throw std::domain_error("endomorphism is not constant on the orbit of " +
                                label.to_string());
      }
      ++it->second.count;
    }
  }
  SchurElement out(n, r);
  for (const auto& [label, seen] : orbits) {
    if (seen.count != orbit_size(label))
      throw std::domain_error("endomorphism vanishes on part of the orbit of " +
                              label.to_string());
    out.add_term(label, seen.value);
  }
  return out;
}

SchurElement schur_multiply(const SchurElement& x, const SchurElement& y) {
  if (x.n() != y.n() || x.r() != y.r())
    throw std::invalid_argument("schur_multiply: (n, r) mismatch");
  return decompose(to_endo(x).compose(to_endo(y)));
}

SchurElement idempotent(const Weight& lambda) {
  if (!lambda.is_composition())
    throw std::invalid_argument("idempotent: " + lambda.to_string() + " is not a composition");
  return SchurElement::basis(MarginMatrix::diagonal(lambda));
}

SchurElement schur_identity(int n, int r) {
  SchurElement out(n, r);
  for (const auto& l : compositions(n, r)) out += idempotent(l);
  return out;
}

std::vector<SchurElement> hom_basis(const Weight& lambda, const Weight& mu) {
  std::vector<SchurElement> out;
  for (const auto& a : margin_matrices(lambda, mu)) out.push_back(SchurElement::basis(a));
  return out;
}

SchurElement involution(const SchurElement& x) {
  SchurElement out(x.n(), x.r());
  for (const auto& [a, c] : x.terms()) out.add_term(a.transpose(), c);
  return out;
}

namespace {

void check_permutation(const std::vector<int>& w, int n) {
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("permutation has the wrong length");
  std::vector<bool> seen(n, false);
  for (int x : w) {
    if (x < 1 || x > n || seen[x - 1]) throw std::invalid_argument("not a permutation");
    seen[x - 1] = true;
  }
}

}  // namespace

Weight permute_weight(const Weight& lambda, const std::vector<int>& w) {
  check_permutation(w, static_cast<int>(lambda.size()));
  std::vector<int> out(lambda.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lambda[w[i] - 1];
  return Weight(std::move(out));
}

SchurElement weyl_relabel(const SchurElement& x, const std::vector<int>& w) {
  const int n = x.n();
  check_permutation(w, n);
  SchurElement out(n, x.r());
  for (const auto& [a, c] : x.terms()) {
    std::vector<int> e(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) e[i * n + j] = a.at(w[i] - 1, w[j] - 1);
    out.add_term(MarginMatrix(n, std::move(e)), c);
  }
  return out;
}

SymmetricGroupIso::SymmetricGroupIso(int r) : r_(r), perms_(permutations(r)) {
  if (r < 1) throw std::invalid_argument("symmetric_group_iso: need r >= 1");
}

SchurElement SymmetricGroupIso::image(const std::vector<int>& pi) const {
  check_permutation(pi, r_);
  std::vector<int> e(static_cast<std::size_t>(r_) * r_, 0);
  for (int b = 0; b < r_; ++b) e[(pi[b] - 1) * r_ + b] = 1;
  return SchurElement::basis(MarginMatrix(r_, std::move(e)));
}

std::map<std::vector<int>, Rational> SymmetricGroupIso::preimage(const SchurElement& x) const {
  if (x.n() != r_ || x.r() != r_)
    throw std::invalid_argument("preimage: element is not in S(r, r)");
  std::map<std::vector<int>, Rational> out;
  for (const auto& [a, c] : x.terms()) {
    std::vector<int> pi(r_, 0);
    for (int b = 0; b < r_; ++b)
      for (int p = 0; p < r_; ++p) {
        int v = a.at(p, b);
        if (v == 1 && pi[b] == 0)
          pi[b] = p + 1;
        else if (v != 0)
          throw std::domain_error("preimage: " + a.to_string() + " is not a permutation matrix");
      }
    for (int b = 0; b < r_; ++b)
      if (pi[b] == 0)
        throw std::domain_error("preimage: " + a.to_string() + " is not a permutation matrix");
    out[pi] += c;
  }
  return out;
}

std::vector<int> SymmetricGroupIso::compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) out[k] = a[b[k] - 1];
  return out;
}

SymmetricGroupIso symmetric_group_iso(int r) { return SymmetricGroupIso(r); }

}  // namespace schurlab
