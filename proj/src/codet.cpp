#include "schurlab/codet.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "schurlab/linalg.hpp"

namespace schurlab {

MultiIndex ell_word(const Weight& nu) {
  if (!nu.is_composition()) throw std::invalid_argument("ell_word: " + nu.to_string());
  MultiIndex out{static_cast<int>(nu.size()), {}};
  for (std::size_t a = 0; a < nu.size(); ++a)
    for (int c = 0; c < nu[a]; ++c) out.letters.push_back(static_cast<int>(a) + 1);
  return out;
}

Codeterminant codeterminant(const Weight& nu, const MultiIndex& i, const MultiIndex& j) {
  if (!nu.is_partition())
    throw std::invalid_argument("codeterminant: shape " + nu.to_string() + " is not dominant");
  if (i.n != static_cast<int>(nu.size()) || j.n != i.n)
    throw std::invalid_argument("codeterminant: alphabet does not match shape length");
  MultiIndex ell = ell_word(nu);
  SchurElement left = SchurElement::basis(pair_to_matrix(i, ell));
  SchurElement right = SchurElement::basis(pair_to_matrix(ell, j));
  return Codeterminant{nu, tableau_of_word(nu, i), tableau_of_word(nu, j),
                       schur_multiply(left, right)};
}

std::vector<Codeterminant> codet_basis(const Weight& lambda, const Weight& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("codet_basis: length mismatch");
  if (lambda.degree() != mu.degree())
    throw std::invalid_argument("codet_basis: degree mismatch " + lambda.to_string() + " vs " +
                                mu.to_string());
  const int n = static_cast<int>(lambda.size());
  std::vector<Codeterminant> out;
  for (const auto& nu : dominant_compositions(n, lambda.degree())) {
    auto lefts = ssyt(nu, lambda);
    auto rights = ssyt(nu, mu);
    for (const auto& s : lefts)
      for (const auto& t : rights)
        out.push_back(codeterminant(nu, MultiIndex{n, s.reading_word()},
                                    MultiIndex{n, t.reading_word()}));
  }
  return out;
}

std::vector<Codeterminant> codet_basis_full(int n, int r) {
  std::vector<Codeterminant> out;
  auto comps = compositions(n, r);
  for (const auto& l : comps)
    for (const auto& m : comps) {
      auto block = codet_basis(l, m);
      out.insert(out.end(), std::make_move_iterator(block.begin()),
                 std::make_move_iterator(block.end()));
    }
  return out;
}

void AxiomResult::fail(std::string witness) {
  passed = false;
  // Keep reports readable; the first witnesses are enough to reproduce.
  if (witnesses.size() < 20) witnesses.push_back(std::move(witness));
}

namespace {

using CellLabel = std::tuple<Weight, std::vector<int>, std::vector<int>>;

CellLabel label_of(const Codeterminant& c) {
  return {c.shape, c.left.reading_word(), c.right.reading_word()};
}

std::string word_string(const std::vector<int>& w) {
  std::ostringstream os;
  for (int x : w) os << x;
  return os.str();
}

std::string cell_string(const Codeterminant& c) {
  return "C^" + c.shape.to_string() + "_{" + word_string(c.left.reading_word()) + "," +
         word_string(c.right.reading_word()) + "}";
}

std::string element_string(const SchurElement& x) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*xi" << a.to_string();
  }
  if (first) os << "0";
  return os.str();
}

bool strictly_higher(const Weight& candidate, const Weight& base, CellOrder order) {
  if (candidate == base) return false;
  return order == CellOrder::dominant_is_higher ? dominance_leq(base, candidate)
                                                : dominance_leq(candidate, base);
}

CellReport check_cells(const std::vector<SchurElement>& algebra_basis,
                       const std::vector<Codeterminant>& cells, CellOrder order) {
  CellReport report;
  report.dimension = algebra_basis.size();
  std::map<CellLabel, std::size_t> index;
  for (std::size_t t = 0; t < cells.size(); ++t) {
    if (!index.emplace(label_of(cells[t]), t).second)
      report.basis.fail("duplicate cell label " + cell_string(cells[t]));
    if (report.shapes.empty() || report.shapes.back() != cells[t].shape)
      report.shapes.push_back(cells[t].shape);
  }

  // (a) C is injective with image a basis.
  std::vector<SchurElement> values;
  for (const auto& c : cells) values.push_back(c.value);
  if (cells.size() != algebra_basis.size())
    report.basis.fail("cell count " + std::to_string(cells.size()) + " != dimension " +
                      std::to_string(algebra_basis.size()));
  std::size_t rk = exact_rank(values);
  if (rk != cells.size())
    report.basis.fail("cells have rank " + std::to_string(rk) + " < " +
                      std::to_string(cells.size()));
  {
    std::vector<SchurElement> joined = algebra_basis;
    joined.insert(joined.end(), values.begin(), values.end());
    if (exact_rank(joined) != algebra_basis.size())
      report.basis.fail("cells leave the algebra spanned by the given basis");
  }

  // (b) iota(C_{S,T}) = C_{T,S}; iota is an involutory antiautomorphism.
  for (const auto& c : cells) {
    auto it = index.find({c.shape, c.right.reading_word(), c.left.reading_word()});
    if (it == index.end()) {
      report.involution.fail("no transposed cell for " + cell_string(c));
      continue;
    }
    if (!(involution(c.value) == cells[it->second].value))
      report.involution.fail("iota(" + cell_string(c) + ") = " +
                             element_string(involution(c.value)) + " != " +
                             cell_string(cells[it->second]));
  }
  for (const auto& x : algebra_basis) {
    if (!(involution(involution(x)) == x)) report.involution.fail("iota^2 != id");
    for (const auto& y : algebra_basis) {
      SchurElement lhs = involution(schur_multiply(x, y));
      SchurElement rhs = schur_multiply(involution(y), involution(x));
      if (!(lhs == rhs))
        report.involution.fail("iota(xy) != iota(y)iota(x) for x=" + element_string(x) +
                               ", y=" + element_string(y));
    }
  }

  if (!report.basis.passed) {
    report.multiplication.fail("skipped: cells are not a basis");
    report.ideal_filtration.fail("skipped: cells are not a basis");
    return report;
  }

  BasisCoordinates coords(values);
  auto coordinates_of = [&](const SchurElement& x) {
    auto c = coords.coordinates(x);
    if (!c) throw std::logic_error("product left the algebra: " + element_string(x));
    return *c;
  };

  // (c) a C^nu_{S,T} = sum_{S'} r_a(S',S) C^nu_{S',T} mod higher cells,
  // with r_a independent of T.
  for (std::size_t ai = 0; ai < algebra_basis.size(); ++ai) {
    const auto& a = algebra_basis[ai];
    // (shape, S) -> coefficient vector over S' seen for the first T.
    std::map<std::pair<Weight, std::vector<int>>,
             std::pair<std::vector<int>, std::map<std::vector<int>, Rational>>>
        first_seen;
    for (std::size_t t = 0; t < cells.size(); ++t) {
      const auto& c = cells[t];
      auto left_coords = coordinates_of(schur_multiply(a, c.value));
      auto right_coords = coordinates_of(schur_multiply(c.value, a));
      std::map<std::vector<int>, Rational> r_a;
      for (std::size_t u = 0; u < cells.size(); ++u) {
        const auto& d = cells[u];
        if (left_coords[u] != 0) {
          if (d.shape == c.shape) {
            if (d.right != c.right)
              report.multiplication.fail("a=" + element_string(a) + " times " + cell_string(c) +
                                         " has coefficient on " + cell_string(d) +
                                         " with a different right index");
            else
              r_a[d.left.reading_word()] = left_coords[u];
          } else if (!strictly_higher(d.shape, c.shape, order)) {
            report.multiplication.fail("a=" + element_string(a) + " times " + cell_string(c) +
                                       " has coefficient on " + cell_string(d) +
                                       " which is not a higher cell");
          }
          if (d.shape != c.shape && !strictly_higher(d.shape, c.shape, order))
            report.ideal_filtration.fail("left product a*" + cell_string(c) + " reaches " +
                                         cell_string(d));
        }
        if (right_coords[u] != 0 && d.shape != c.shape &&
            !strictly_higher(d.shape, c.shape, order))
          report.ideal_filtration.fail("right product " + cell_string(c) + "*a reaches " +
                                       cell_string(d));
      }
      auto key = std::make_pair(c.shape, c.left.reading_word());
      auto [it, inserted] = first_seen.try_emplace(key, c.right.reading_word(), r_a);
      if (!inserted && it->second.second != r_a)
        report.multiplication.fail("r_a(S',S) depends on T: a=" + element_string(a) +
                                   ", shape " + c.shape.to_string() + ", S=" +
                                   word_string(c.left.reading_word()) + ", T=" +
                                   word_string(it->second.first) + " vs T=" +
                                   word_string(c.right.reading_word()));
    }
  }
  return report;
}

}  // namespace

CellReport cell_datum_check(const Weight& lambda, CellOrder order) {
  if (!lambda.is_composition())
    throw std::invalid_argument("cell_datum_check: " + lambda.to_string() +
                                " is not a composition");
  const int n = static_cast<int>(lambda.size());
  const int r = lambda.degree();
  tensor_dimension(n, r);
  auto cells = codet_basis(lambda, lambda);
  CellReport report = check_cells(hom_basis(lambda, lambda), cells, order);

  // e A e for e = 1_lambda: truncating the full codeterminant basis keeps
  // exactly the cells whose tableaux both have weight lambda.
  SchurElement e = idempotent(lambda);
  if (!(involution(e) == e)) report.truncation.fail("iota(1_lambda) != 1_lambda");
  std::map<CellLabel, SchurElement> expected;
  for (const auto& c : cells) expected.emplace(label_of(c), c.value);
  std::size_t kept = 0;
  for (const auto& c : codet_basis_full(n, r)) {
    SchurElement ece = schur_multiply(schur_multiply(e, c.value), e);
    if (ece.is_zero()) {
      if (expected.count(label_of(c)))
        report.truncation.fail("e C e vanishes for " + cell_string(c));
      continue;
    }
    ++kept;
    auto it = expected.find(label_of(c));
    if (it == expected.end())
      report.truncation.fail("e C e survives for " + cell_string(c) + " outside M(lambda)");
    else if (!(it->second == ece))
      report.truncation.fail("e C e differs from the truncated cell " + cell_string(c));
  }
  if (kept != cells.size())
    report.truncation.fail("truncation keeps " + std::to_string(kept) + " cells, expected " +
                           std::to_string(cells.size()));
  for (const auto& nu : dominant_compositions(n, r)) {
    bool present = false;
    for (const auto& s : report.shapes) present = present || s == nu;
    if (present != (kostka(nu, lambda) != 0))
      report.truncation.fail("shape " + nu.to_string() + " membership disagrees with Kostka");
  }
  return report;
}

CellReport cell_datum_check_full(int n, int r, CellOrder order) {
  tensor_dimension(n, r);
  std::vector<SchurElement> basis;
  for (const auto& a : theta(n, r)) basis.push_back(SchurElement::basis(a));
  return check_cells(basis, codet_basis_full(n, r), order);
}

}  // namespace schurlab
