#include "schurlab/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schurlab {

int Weight::degree() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

bool Weight::is_composition() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x >= 0; });
}

bool Weight::is_partition() const {
  return is_composition() &&
         std::is_sorted(entries_.begin(), entries_.end(), std::greater<>());
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight length mismatch");
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return Weight(std::move(out));
}

Weight operator-(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight length mismatch");
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return Weight(std::move(out));
}

std::vector<Weight> compositions(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("compositions: need n >= 1, r >= 0");
  std::vector<Weight> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      cur[pos] = left;
      out.emplace_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, r);
  return out;
}

std::vector<Weight> dominant_compositions(int n, int r) {
  std::vector<Weight> out;
  for (auto& w : compositions(n, r))
    if (w.is_partition()) out.push_back(std::move(w));
  return out;
}

MultiIndex make_multi_index(int n, std::vector<int> letters) {
  if (n < 1) throw std::invalid_argument("multi-index: n must be positive");
  for (int x : letters)
    if (x < 1 || x > n) throw std::invalid_argument("multi-index letter out of range");
  return MultiIndex{n, std::move(letters)};
}

Weight weight_of(const MultiIndex& i) {
  std::vector<int> w(i.n, 0);
  for (int x : i.letters) ++w[x - 1];
  return Weight(std::move(w));
}

MarginMatrix::MarginMatrix(int n, std::vector<int> entries, MatrixMode mode)
    : n_(n), mode_(mode), entries_(std::move(entries)) {
  if (n < 1 || entries_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("margin matrix: expected n*n entries");
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      int v = at(i, j);
      if (v < 0 && (mode_ == MatrixMode::nonnegative || i != j))
        throw std::invalid_argument("margin matrix: negative entry " + to_string());
    }
}

MarginMatrix MarginMatrix::from_rows(const std::vector<std::vector<int>>& rows,
                                     MatrixMode mode) {
  int n = static_cast<int>(rows.size());
  std::vector<int> e;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("margin matrix: rows must form a square");
    e.insert(e.end(), row.begin(), row.end());
  }
  return MarginMatrix(n, std::move(e), mode);
}

MarginMatrix MarginMatrix::diagonal(const Weight& w) {
  int n = static_cast<int>(w.size());
  std::vector<int> e(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) e[i * n + i] = w[i];
  bool nonneg = w.is_composition();
  return MarginMatrix(n, std::move(e),
                      nonneg ? MatrixMode::nonnegative : MatrixMode::off_diagonal);
}

std::vector<std::vector<int>> MarginMatrix::rows() const {
  std::vector<std::vector<int>> out(n_);
  for (int i = 0; i < n_; ++i)
    out[i].assign(entries_.begin() + i * n_, entries_.begin() + (i + 1) * n_);
  return out;
}

int MarginMatrix::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

Weight MarginMatrix::row_sums() const {
  std::vector<int> w(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) w[i] += at(i, j);
  return Weight(std::move(w));
}

Weight MarginMatrix::col_sums() const {
  std::vector<int> w(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) w[j] += at(i, j);
  return Weight(std::move(w));
}

MarginMatrix MarginMatrix::transpose() const {
  std::vector<int> e(entries_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) e[j * n_ + i] = at(i, j);
  return MarginMatrix(n_, std::move(e), mode_);
}

bool MarginMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && at(i, j) != 0) return false;
  return true;
}

std::string MarginMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    if (i) os << ';';
    for (int j = 0; j < n_; ++j) {
      if (j) os << ',';
      os << at(i, j);
    }
  }
  os << ']';
  return os.str();
}

std::vector<MarginMatrix> margin_matrices(const Weight& lambda, const Weight& mu) {
  if (lambda.size() != mu.size() || lambda.size() == 0)
    throw std::invalid_argument("margin_matrices: weights must have equal positive length");
  if (!lambda.is_composition() || !mu.is_composition())
    throw std::invalid_argument("margin_matrices: margins must be compositions");
  if (lambda.degree() != mu.degree())
    throw std::invalid_argument("margin_matrices: incompatible margins " +
                                lambda.to_string() + " vs " + mu.to_string());
  const int n = static_cast<int>(lambda.size());
  std::vector<MarginMatrix> out;
  std::vector<int> cells(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> col_left(mu.begin(), mu.end());

  // Fill row-major; each value ascends so the output is lexicographic.
  std::function<void(int, int, int)> rec = [&](int i, int j, int row_left) {
    if (i == n - 1) {
      // The last row is forced by the column sums.
      int s = 0;
      for (int c = 0; c < n; ++c) {
        cells[i * n + c] = col_left[c];
        s += col_left[c];
      }
      if (s == row_left) out.emplace_back(n, cells);
      return;
    }
    if (j == n - 1) {
      if (row_left > col_left[j]) return;
      cells[i * n + j] = row_left;
      col_left[j] -= row_left;
      rec(i + 1, 0, lambda[i + 1]);
      col_left[j] += row_left;
      return;
    }
    int capacity_after = 0;
    for (int c = j + 1; c < n; ++c) capacity_after += col_left[c];
    int lo = std::max(0, row_left - capacity_after);
    int hi = std::min(row_left, col_left[j]);
    for (int v = lo; v <= hi; ++v) {
      cells[i * n + j] = v;
      col_left[j] -= v;
      rec(i, j + 1, row_left - v);
      col_left[j] += v;
    }
  };
  rec(0, 0, lambda[0]);
  return out;
}

std::vector<MarginMatrix> theta(int n, int r) {
  std::vector<MarginMatrix> out;
  auto comps = compositions(n, r);
  for (const auto& l : comps)
    for (const auto& m : comps) {
      auto block = margin_matrices(l, m);
      out.insert(out.end(), block.begin(), block.end());
    }
  return out;
}

MarginMatrix pair_to_matrix(const MultiIndex& i, const MultiIndex& j) {
  if (i.length() != j.length())
    throw std::invalid_argument("pair_to_matrix: multi-index length mismatch");
  if (i.n != j.n) throw std::invalid_argument("pair_to_matrix: alphabet mismatch");
  const int n = i.n;
  std::vector<int> e(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t k = 0; k < i.length(); ++k)
    ++e[(i.letters[k] - 1) * n + (j.letters[k] - 1)];
  return MarginMatrix(n, std::move(e));
}

std::pair<MultiIndex, MultiIndex> canonical_pair(const MarginMatrix& a) {
  if (a.mode() != MatrixMode::nonnegative)
    throw std::invalid_argument("canonical_pair: matrix is not in Theta(n, r)");
  MultiIndex i{a.n(), {}}, j{a.n(), {}};
  for (int p = 0; p < a.n(); ++p)
    for (int q = 0; q < a.n(); ++q)
      for (int c = 0; c < a.at(p, q); ++c) {
        i.letters.push_back(p + 1);
        j.letters.push_back(q + 1);
      }
  return {std::move(i), std::move(j)};
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
  return w;
}

Weight Tableau::weight(int n) const {
  std::vector<int> w(n, 0);
  for (const auto& row : rows)
    for (int x : row) ++w[x - 1];
  return Weight(std::move(w));
}

bool Tableau::is_semistandard() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 1; j < rows[i].size(); ++j)
      if (rows[i][j - 1] > rows[i][j]) return false;
    if (i > 0)
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        if (j >= rows[i - 1].size() || rows[i - 1][j] >= rows[i][j]) return false;
  }
  return true;
}

Tableau tableau_of_word(const Weight& nu, const MultiIndex& i) {
  if (!nu.is_composition()) throw std::invalid_argument("tableau shape must be nonnegative");
  if (nu.degree() != static_cast<int>(i.length()))
    throw std::invalid_argument("tableau_of_word: word length differs from shape size");
  Tableau t;
  std::size_t pos = 0;
  for (int len : nu) {
    if (len == 0) continue;
    t.shape.push_back(len);
    t.rows.emplace_back(i.letters.begin() + pos, i.letters.begin() + pos + len);
    pos += len;
  }
  return t;
}

std::vector<Tableau> ssyt(const Weight& shape, const Weight& weight) {
  if (!shape.is_partition())
    throw std::invalid_argument("ssyt: shape " + shape.to_string() + " is not a partition");
  if (!weight.is_composition())
    throw std::invalid_argument("ssyt: weight must be a composition");
  if (shape.degree() != weight.degree())
    throw std::invalid_argument("ssyt: shape and weight have different degrees");

  std::vector<int> target;
  for (int x : shape)
    if (x > 0) target.push_back(x);
  const std::size_t rows = target.size();
  const int n = static_cast<int>(weight.size());

  std::vector<Tableau> out;
  Tableau cur;
  cur.shape = target;
  cur.rows.assign(rows, {});

  // Each letter k occupies a horizontal strip added to the current shape.
  std::function<void(int)> place_letter;
  std::function<void(int, std::size_t, int)> strip = [&](int k, std::size_t row, int left) {
    if (left == 0) {
      place_letter(k + 1);
      return;
    }
    if (row == rows) return;
    int len = static_cast<int>(cur.rows[row].size());
    int cap = target[row] - len;
    if (row > 0) {
      // Horizontal strip: new cells must sit below already-filled cells of
      // letters < k in the row above.
      int above_old = 0;
      for (int x : cur.rows[row - 1])
        if (x < k + 1) ++above_old;
      cap = std::min(cap, above_old - len);
    }
    cap = std::max(cap, 0);
    for (int add = std::min(cap, left); add >= 0; --add) {
      for (int c = 0; c < add; ++c) cur.rows[row].push_back(k + 1);
      strip(k, row + 1, left - add);
      for (int c = 0; c < add; ++c) cur.rows[row].pop_back();
    }
  };
  place_letter = [&](int k) {
    if (k == n) {
      for (std::size_t r = 0; r < rows; ++r)
        if (static_cast<int>(cur.rows[r].size()) != target[r]) return;
      out.push_back(cur);
      return;
    }
    strip(k, 0, weight[k]);
  };
  place_letter(0);

  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return a.reading_word() < b.reading_word();
  });
  return out;
}

std::size_t kostka(const Weight& mu, const Weight& lambda) {
  return ssyt(mu, lambda).size();
}

bool dominance_leq(const Weight& a, const Weight& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("dominance: degree mismatch " + a.to_string() + " vs " +
                                b.to_string());
  std::size_t len = std::max(a.size(), b.size());
  long sa = 0, sb = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

Weight sort_dominant(const Weight& lambda) {
  std::vector<int> e = lambda.entries();
  std::sort(e.begin(), e.end(), std::greater<>());
  return Weight(std::move(e));
}

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::size_t multinomial(const Weight& lambda) {
  std::size_t out = 1;
  int seen = 0;
  for (int part : lambda)
    for (int k = 1; k <= part; ++k) {
      ++seen;
      out = out * seen / k;
    }
  return out;
}

}  // namespace schurlab
