#include "schurlab/udot.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "schurlab/linalg.hpp"

namespace schurlab {

ExponentPattern make_pattern(int n, const std::vector<int>& entries) {
  ExponentPattern a(n, entries);
  for (int i = 0; i < n; ++i)
    if (a.at(i, i) != 0) throw std::invalid_argument("exponent pattern with nonzero diagonal");
  return a;
}

int pattern_degree(const ExponentPattern& a) { return a.total(); }

Weight pattern_weight(const ExponentPattern& a) {
  std::vector<int> w(a.n(), 0);
  for (int p = 0; p < a.n(); ++p)
    for (int q = 0; q < a.n(); ++q) {
      w[p] += a.at(p, q);
      w[q] -= a.at(p, q);
    }
  return Weight(std::move(w));
}

UdotElement::UdotElement(Weight left, Weight right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.size() != right_.size() || left_.size() == 0)
    throw std::invalid_argument("U-dot element: weights must have the same positive length");
}

UdotElement UdotElement::idempotent(const Weight& lambda) {
  UdotElement out(lambda, lambda);
  out.add_term(ExponentPattern(static_cast<int>(lambda.size()),
                               std::vector<int>(lambda.size() * lambda.size(), 0)),
               1);
  return out;
}

UdotElement UdotElement::basis(const ExponentPattern& a, const Weight& mu) {
  UdotElement out(mu + pattern_weight(a), mu);
  out.add_term(a, 1);
  return out;
}

void UdotElement::add_term(const ExponentPattern& a, const Rational& c) {
  if (a.n() != n()) throw std::invalid_argument("pattern size differs from n");
  for (int i = 0; i < n(); ++i)
    if (a.at(i, i) != 0) throw std::invalid_argument("exponent pattern with nonzero diagonal");
  if (pattern_weight(a) != left_ - right_)
    throw std::invalid_argument("pattern " + a.to_string() + " does not move " +
                                right_.to_string() + " to " + left_.to_string());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, 0);
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational UdotElement::coefficient(const ExponentPattern& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool UdotElement::is_integral() const {
  for (const auto& [a, c] : terms_)
    if (!schurlab::is_integral(c)) return false;
  return true;
}

void UdotElement::check_compatible(const UdotElement& rhs) const {
  if (left_ != rhs.left_ || right_ != rhs.right_)
    throw std::invalid_argument("adding U-dot elements from different weight blocks");
}

UdotElement& UdotElement::operator+=(const UdotElement& rhs) {
  check_compatible(rhs);
  for (const auto& [a, c] : rhs.terms_) add_term(a, c);
  return *this;
}

UdotElement& UdotElement::operator-=(const UdotElement& rhs) {
  check_compatible(rhs);
  for (const auto& [a, c] : rhs.terms_) add_term(a, -c);
  return *this;
}

UdotElement& UdotElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, v] : terms_) v *= c;
  return *this;
}

UdotElement operator+(UdotElement a, const UdotElement& b) { return a += b; }
UdotElement operator-(UdotElement a, const UdotElement& b) { return a -= b; }
UdotElement operator*(const Rational& c, UdotElement a) { return a *= c; }

bool in_root_lattice(const Weight& lambda, const Weight& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("weights of different length");
  return lambda.degree() == mu.degree();
}

std::vector<ExponentPattern> udot_patterns(const Weight& lambda, const Weight& mu, int d) {
  if (d < 0) throw std::invalid_argument("udot_patterns: negative degree bound");
  std::vector<ExponentPattern> out;
  if (!in_root_lattice(lambda, mu)) return out;
  const int n = static_cast<int>(lambda.size());
  const Weight target = lambda - mu;
  std::vector<std::pair<int, int>> slots;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (p != q) slots.emplace_back(p, q);
  std::vector<int> entries(static_cast<std::size_t>(n) * n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t s, int left) {
    if (s == slots.size()) {
      ExponentPattern a(n, entries);
      if (pattern_weight(a) == target) out.push_back(a);
      return;
    }
    auto [p, q] = slots[s];
    for (int x = 0; x <= left; ++x) {
      entries[p * n + q] = x;
      rec(s + 1, left - x);
    }
    entries[p * n + q] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), [](const ExponentPattern& a, const ExponentPattern& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  });
  return out;
}

std::vector<UdotElement> udot_basis_upto(const Weight& lambda, const Weight& mu, int d) {
  std::vector<UdotElement> out;
  for (const auto& a : udot_patterns(lambda, mu, d)) out.push_back(UdotElement::basis(a, mu));
  return out;
}

namespace {

UElement divided_product(const ExponentPattern& a, bool f_first) {
  const int n = a.n();
  PBWMonomial f(n), e(n);
  Integer denom = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      f.exponent(f_key(n, i, j)) = a.at(j - 1, i - 1);
      e.exponent(e_key(n, i, j)) = a.at(i - 1, j - 1);
      denom *= factorial(a.at(j - 1, i - 1)) * factorial(a.at(i - 1, j - 1));
    }
  Rational scale = Rational(1) / Rational(denom);
  if (f_first) {
    // Already in normal order: f's then e's.
    std::vector<int> ex(generator_count(n));
    for (int g = 0; g < generator_count(n); ++g) ex[g] = f.exponent(g) + e.exponent(g);
    return UElement::monomial(PBWMonomial(n, ex), scale);
  }
  return scale * u_multiply(UElement::monomial(e), UElement::monomial(f));
}

}  // namespace

UElement lift_pattern(const ExponentPattern& a) { return divided_product(a, true); }

UElement lift(const UdotElement& u) {
  UElement out(u.n());
  for (const auto& [a, c] : u.terms()) out += c * lift_pattern(a);
  return out;
}

UdotElement udot_project(const UElement& x, const Weight& lambda, const Weight& mu) {
  const int n = x.n();
  if (static_cast<int>(lambda.size()) != n || static_cast<int>(mu.size()) != n)
    throw std::invalid_argument("udot_project: weight length differs from n");
  UdotElement out(lambda, mu);
  const Weight target = lambda - mu;
  for (const auto& [m, c] : x.terms()) {
    if (m.weight() != target) continue;
    // H^b e^c 1_mu = prod (mu_i + wt(e^c)_i)^{b_i} e^c 1_mu
    std::vector<int> shifted(mu.begin(), mu.end());
    std::vector<int> pattern(static_cast<std::size_t>(n) * n, 0);
    Integer fact = 1;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        int ce = m.e(i, j), cf = m.f(i, j);
        shifted[i - 1] += ce;
        shifted[j - 1] -= ce;
        pattern[(i - 1) * n + (j - 1)] = ce;
        pattern[(j - 1) * n + (i - 1)] = cf;
        fact *= factorial(ce) * factorial(cf);
      }
    Integer hval = 1;
    for (int i = 1; i <= n; ++i) {
      Integer base = shifted[i - 1];
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), m.h(i));
      hval *= p;
    }
    if (hval == 0) continue;
    out.add_term(ExponentPattern(n, std::move(pattern)), c * Rational(hval * fact));
  }
  return out;
}

UdotElement udot_multiply(const UdotElement& u, const UdotElement& v) {
  if (u.n() != v.n()) throw std::invalid_argument("udot_multiply: n mismatch");
  if (u.right() != v.left()) return UdotElement(u.left(), v.right());
  return udot_project(u_multiply(lift(u), lift(v)), u.left(), v.right());
}

UdotElement udot_basis_b(const ExponentPattern& a, const Weight& mu) {
  return udot_project(divided_product(a, false), mu + pattern_weight(a), mu);
}

std::vector<UdotElement> udot_basis_b_upto(const Weight& lambda, const Weight& mu, int d) {
  std::vector<UdotElement> out;
  for (const auto& a : udot_patterns(lambda, mu, d)) out.push_back(udot_basis_b(a, mu));
  return out;
}

UdotElement divided_generator(int i, int a, const Weight& lambda, GeneratorSide side) {
  const int n = static_cast<int>(lambda.size());
  if (i < 1 || i >= n) throw std::invalid_argument("divided_generator: need 1 <= i < n");
  if (a < 0) throw std::invalid_argument("divided_generator: negative exponent");
  std::vector<int> entries(static_cast<std::size_t>(n) * n, 0);
  if (side == GeneratorSide::e)
    entries[(i - 1) * n + i] = a;
  else
    entries[i * n + (i - 1)] = a;
  return UdotElement::basis(ExponentPattern(n, std::move(entries)), lambda);
}

SchurElement psi(const UdotElement& u, int r) {
  const int n = u.n();
  SchurElement zero(n, r);
  auto in_lambda = [r](const Weight& w) { return w.is_composition() && w.degree() == r; };
  if (!in_lambda(u.left()) || !in_lambda(u.right()) || u.is_zero()) return zero;
  return decompose(truncate(d_rho_block(lift(u), r, u.right()), u.left(), u.right()));
}

std::vector<int> weight_tilde(const Weight& lambda) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i) out.push_back(lambda[i] - lambda[i + 1]);
  return out;
}

UdotElement shift(const UdotElement& u, int k) {
  Weight ones(std::vector<int>(u.n(), k));
  UdotElement out(u.left() + ones, u.right() + ones);
  for (const auto& [a, c] : u.terms()) out.add_term(a, c);
  return out;
}

UdotElement udot_weyl_relabel(const UdotElement& u, const std::vector<int>& w) {
  const int n = u.n();
  Weight left = permute_weight(u.left(), w);  // validates w
  Weight right = permute_weight(u.right(), w);
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[w[i] - 1] = i + 1;
  UElement image(n);
  for (const auto& [a, c] : u.terms()) {
    UElement term = UElement::one(n);
    Integer denom = 1;
    for (int g = 0; g < generator_count(n); ++g) {
      auto [p, q] = matrix_unit_of_key(n, g);
      if (p == q) continue;
      int x = a.at(p - 1, q - 1);
      UElement gen = UElement::matrix_unit(n, sigma[p - 1], sigma[q - 1]);
      for (int t = 0; t < x; ++t) term = u_multiply(term, gen);
      denom *= factorial(x);
    }
    image += (c / Rational(denom)) * term;
  }
  return udot_project(image, left, right);
}

std::vector<RelationCheck> commutator_relations(int n, int window) {
  if (n < 2) throw std::invalid_argument("commutator_relations: need n >= 2");
  if (window < 0) throw std::invalid_argument("commutator_relations: negative window");
  std::vector<RelationCheck> out;
  std::vector<int> entries(n, -window);
  auto alpha = [n](int i) {
    std::vector<int> a(n, 0);
    a[i - 1] = 1;
    a[i] = -1;
    return Weight(std::move(a));
  };
  while (true) {
    Weight lambda(entries);
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        RelationCheck rc{lambda, i, j, UdotElement(lambda, lambda), false, false, false};
        UdotElement ef =
            udot_multiply(divided_generator(i, 1, lambda - alpha(j), GeneratorSide::e),
                          divided_generator(j, 1, lambda, GeneratorSide::f));
        UdotElement fe =
            udot_multiply(divided_generator(j, 1, lambda + alpha(i), GeneratorSide::f),
                          divided_generator(i, 1, lambda, GeneratorSide::e));
        rc.commutator = ef - fe;
        UdotElement one = UdotElement::idempotent(lambda);
        UdotElement zero(rc.commutator.left(), rc.commutator.right());
        if (i == j) {
          rc.pairing_holds = rc.commutator == Rational(lambda[i - 1] - lambda[i]) * one;
          rc.literal_holds = rc.commutator == Rational(lambda[i - 1]) * one;
        } else {
          rc.pairing_holds = rc.commutator == zero;
          rc.literal_holds = rc.pairing_holds;
        }
        UdotElement ei = divided_generator(i, 1, lambda, GeneratorSide::e);
        UdotElement fi = divided_generator(i, 1, lambda, GeneratorSide::f);
        rc.idempotent_moves =
            udot_multiply(UdotElement::idempotent(lambda + alpha(i)), ei) == ei &&
            udot_multiply(ei, one) == ei &&
            udot_multiply(UdotElement::idempotent(lambda - alpha(i)), fi) == fi &&
            udot_multiply(fi, one) == fi && udot_multiply(one, ei).is_zero() &&
            udot_multiply(one, fi).is_zero();
        out.push_back(std::move(rc));
      }
    int pos = n - 1;
    while (pos >= 0 && entries[pos] == window) entries[pos--] = -window;
    if (pos < 0) break;
    ++entries[pos];
  }
  return out;
}

namespace {

UdotElement gl2_b(const Weight& lambda, int a) {
  return UdotElement::basis(ExponentPattern(2, {0, a, a, 0}), lambda);
}

std::map<int, Rational> gl2_coords(const UdotElement& u) {
  std::map<int, Rational> out;
  for (const auto& [p, c] : u.terms()) {
    if (p.at(0, 1) != p.at(1, 0)) throw std::logic_error("gl_2 generic algebra left its block");
    out[p.at(0, 1)] = c;
  }
  return out;
}

}  // namespace

Gl2Table gl2_generic_table(const Weight& lambda, int d) {
  if (lambda.size() != 2) throw std::invalid_argument("gl2_generic_table: need n = 2");
  if (d < 0) throw std::invalid_argument("gl2_generic_table: negative degree");
  Gl2Table t;
  t.lambda = lambda;
  t.degree = d;
  t.unit = true;
  t.commutative = true;
  t.integral = true;
  for (int a = 0; a <= d; ++a)
    for (int c = 0; c <= d; ++c) {
      UdotElement prod = udot_multiply(gl2_b(lambda, a), gl2_b(lambda, c));
      if (!prod.is_integral()) t.integral = false;
      t.products[{a, c}] = gl2_coords(prod);
      if (a == 0 && !(prod == gl2_b(lambda, c))) t.unit = false;
      if (c == 0 && !(prod == gl2_b(lambda, a))) t.unit = false;
    }
  for (int a = 0; a <= d; ++a)
    for (int c = 0; c < a; ++c)
      if (t.products[{a, c}] != t.products[{c, a}]) t.commutative = false;

  RationalMatrix powers;
  UdotElement p = UdotElement::idempotent(lambda);
  for (int k = 0; k <= d; ++k) {
    std::vector<Rational> row(d + 1, 0);
    for (const auto& [deg, c] : gl2_coords(p)) {
      if (deg > d) throw std::logic_error("b_1 power exceeded its degree");
      row[deg] = c;
    }
    powers.push_back(std::move(row));
    p = udot_multiply(p, gl2_b(lambda, 1));
  }
  t.generated_by_b1 = rank(powers) == static_cast<std::size_t>(d + 1);
  return t;
}

SymmetricQuotientReport u0_symmetric_group(int r) {
  if (r < 1) throw std::invalid_argument("u0_symmetric_group: need r >= 1");
  if (r > 4) throw ResourceLimitError("u0_symmetric_group: r = " + std::to_string(r) +
                                      " exceeds the bound r <= 4");
  SymmetricQuotientReport rep;
  rep.r = r;
  rep.expected_rank = static_cast<std::size_t>(factorial(r).get_ui());
  const Weight omega(std::vector<int>(r, 1));
  auto span = udot_basis_upto(omega, omega, r);
  std::vector<SchurElement> images;
  for (const auto& u : span) images.push_back(psi(u, r));
  rep.rank = exact_rank(images);

  auto labels = margin_matrices(omega, omega);
  IntegerMatrix rows;
  bool integral = true;
  for (const auto& x : images) {
    if (!x.is_integral()) integral = false;
    std::vector<Integer> row;
    for (const auto& a : labels) row.push_back(x.coefficient(a).get_num());
    rows.push_back(std::move(row));
  }
  rep.integer_surjective = integral && spans_integer_lattice(rows, labels.size());
  if (!rep.integer_surjective) rep.witnesses.push_back("images do not span Z Sigma_r");

  rep.multiplicative = true;
  for (std::size_t s = 0; s < span.size(); ++s)
    for (std::size_t t = 0; t < span.size(); ++t) {
      SchurElement lhs = psi(udot_multiply(span[s], span[t]), r);
      SchurElement rhs = schur_multiply(images[s], images[t]);
      if (!(lhs == rhs)) {
        rep.multiplicative = false;
        if (rep.witnesses.size() < 20)
          rep.witnesses.push_back("psi not multiplicative on patterns " +
                                  span[s].terms().begin()->first.to_string() + ", " +
                                  span[t].terms().begin()->first.to_string());
      }
    }

  SymmetricGroupIso iso(r);
  rep.group_table = true;
  for (const auto& a : iso.elements())
    for (const auto& b : iso.elements()) {
      if (!(schur_multiply(iso.image(a), iso.image(b)) == iso.image(SymmetricGroupIso::compose(a, b)))) {
        rep.group_table = false;
        if (rep.witnesses.size() < 20) rep.witnesses.push_back("group table mismatch");
      }
    }
  return rep;
}

}  // namespace schurlab
