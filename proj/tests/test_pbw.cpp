#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "schurlab/linalg.hpp"
#include "schurlab/pbw.hpp"

using namespace schurlab;

TEST_CASE("generator keys") {
  CHECK(generator_count(3) == 9);
  CHECK(f_key(3, 1, 2) == 0);
  CHECK(f_key(3, 2, 3) == 2);
  CHECK(h_key(3, 1) == 3);
  CHECK(e_key(3, 1, 2) == 6);
  for (int g = 0; g < 9; ++g) {
    auto [p, q] = matrix_unit_of_key(3, g);
    CHECK(key_of_matrix_unit(3, p, q) == g);
  }
  CHECK(matrix_unit_of_key(3, f_key(3, 1, 3)) == std::pair{3, 1});
}

TEST_CASE("defining brackets") {
  UElement e = e_simple(2, 1), f = f_simple(2, 1);
  CHECK(u_multiply(e, f) - u_multiply(f, e) == h_elem(2, 1) - h_elem(2, 2));
  // e f is not in normal order; its normal form is f e + H_1 - H_2.
  CHECK(u_multiply(e, f) == u_multiply(f, e) + h_elem(2, 1) - h_elem(2, 2));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = j + 1; k <= 3; ++k) {
        UElement ejk = e_elem(3, j, k);
        int delta = (i == j) - (i == k);
        CHECK(u_multiply(h_elem(3, i), ejk) ==
              u_multiply(ejk, h_elem(3, i)) + Rational(delta) * ejk);
      }
  // [e_12, e_23] = e_13 in gl_3.
  CHECK(u_multiply(e_elem(3, 1, 2), e_elem(3, 2, 3)) -
            u_multiply(e_elem(3, 2, 3), e_elem(3, 1, 2)) ==
        e_elem(3, 1, 3));
}

TEST_CASE("straightening agrees with the tensor representation") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 50; ++t) {
    UElement x = oracle::random_u(rng, 3, 4), y = oracle::random_u(rng, 3, 4);
    CHECK(d_rho(u_multiply(x, y), 3) == d_rho(x, 3).compose(d_rho(y, 3)));
  }
}

TEST_CASE("multiplication is associative") {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + t % 2;
    UElement x = oracle::random_u(rng, n, 3), y = oracle::random_u(rng, n, 3),
             z = oracle::random_u(rng, n, 3);
    CHECK(u_multiply(u_multiply(x, y), z) == u_multiply(x, u_multiply(y, z)));
  }
  CHECK_THROWS_AS(u_multiply(UElement::one(2), UElement::one(3)), std::invalid_argument);
}

TEST_CASE("divided powers and H-binomials") {
  MarginMatrix zero = MarginMatrix::from_rows({{0, 0}, {0, 0}});
  CHECK(divided_monomial(zero, {0, 0}, PBWSide::f_first) == UElement::one(2));
  MarginMatrix f2 = MarginMatrix::from_rows({{0, 0}, {2, 0}});
  UElement fd = divided_monomial(f2, {0, 0}, PBWSide::f_first);
  CHECK(fd == Rational(1, 2) * u_power(f_simple(2, 1), 2));
  UElement h = h_elem(2, 1);
  CHECK(h_binomial(2, 1, 2) == Rational(1, 2) * (u_multiply(h, h) - h));
  CHECK(h_binomial(2, 1, 0) == UElement::one(2));
}

TEST_CASE("integrality coordinates") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      UElement fa = divided_monomial(MarginMatrix::from_rows({{0, 0}, {a, 0}}), {0, 0},
                                     PBWSide::f_first);
      UElement fb = divided_monomial(MarginMatrix::from_rows({{0, 0}, {b, 0}}), {0, 0},
                                     PBWSide::f_first);
      auto rep = integrality_coords(u_multiply(fa, fb));
      CHECK(rep.integral);
      PBWMonomial key(2);
      key.exponent(f_key(2, 1, 2)) = a + b;
      REQUIRE(rep.coordinates.size() == 1);
      CHECK(rep.coordinates.at(key) == Rational(binomial(a + b, a)));
    }
  CHECK_FALSE(integrality_coords(Rational(1, 2) * f_simple(2, 1)).integral);
  // binom(H, 2) is a basis vector, H^2 = 2 binom(H, 2) + binom(H, 1).
  auto rep = integrality_coords(h_binomial(2, 1, 2));
  CHECK(rep.integral);
  CHECK(rep.coordinates.size() == 1);
}

TEST_CASE("products of divided-power generators stay in the Z-form") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> which(0, 2), power(0, 3);
  for (int t = 0; t < 20; ++t) {
    UElement x = UElement::one(2);
    for (int s = 0; s < 4; ++s) {
      int a = power(rng);
      UElement g(2);
      switch (which(rng)) {
        case 0:
          g = divided_monomial(MarginMatrix::from_rows({{0, 0}, {a, 0}}), {0, 0},
                               PBWSide::f_first);
          break;
        case 1:
          g = divided_monomial(MarginMatrix::from_rows({{0, a}, {0, 0}}), {0, 0},
                               PBWSide::f_first);
          break;
        default:
          g = h_binomial(2, 1 + a % 2, a);
      }
      x = u_multiply(x, g);
    }
    CHECK(integrality_coords(x).integral);
  }
}

TEST_CASE("the two orderings of the Z-basis differ by a unimodular change") {
  // For n = 2 and total degree <= 3, write every e-first element in the
  // f-first divided-power basis.
  std::vector<PBWMonomial> labels;
  for (int a = 0; a <= 3; ++a)
    for (int b1 = 0; a + b1 <= 3; ++b1)
      for (int b2 = 0; a + b1 + b2 <= 3; ++b2)
        for (int c = 0; a + b1 + b2 + c <= 3; ++c) labels.push_back(PBWMonomial(2, {a, b1, b2, c}));
  IntegerMatrix m;
  for (const auto& lab : labels) {
    MarginMatrix a = MarginMatrix::from_rows({{0, lab.e(1, 2)}, {lab.f(1, 2), 0}});
    auto rep = integrality_coords(divided_monomial(a, {lab.h(1), lab.h(2)}, PBWSide::e_first));
    REQUIRE(rep.integral);
    std::vector<Integer> row;
    for (const auto& other : labels) {
      auto it = rep.coordinates.find(other);
      row.push_back(it == rep.coordinates.end() ? Integer(0) : it->second.get_num());
    }
    std::size_t found = 0;
    for (const auto& [k, v] : rep.coordinates)
      found += std::find(labels.begin(), labels.end(), k) != labels.end();
    CHECK(found == rep.coordinates.size());
    m.push_back(row);
  }
  CHECK(abs(determinant(m)) == 1);
}

TEST_CASE("the tensor representation") {
  TensorSpace space(3, 2);
  TensorEndo h2 = d_rho(h_elem(3, 2), 2);
  for (TensorIndex k = 0; k < space.dimension(); ++k)
    CHECK(h2.entry(k, k) == space.weight(k)[1]);
  CHECK(h2.nonzeros() == 5);  // words containing the letter 2
  CHECK(d_rho(UElement::one(3), 2) == identity_endo(3, 2));
  UElement c = u_multiply(e_simple(2, 1), f_simple(2, 1)) - u_multiply(f_simple(2, 1), e_simple(2, 1));
  CHECK(d_rho(c, 2) == d_rho(h_elem(2, 1) - h_elem(2, 2), 2));
  CHECK_THROWS_AS(d_rho(UElement::one(10), 7), ResourceLimitError);
}

TEST_CASE("H-binomials give the weight idempotents") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r)
      for (const auto& l : compositions(n, r)) CHECK(verify_idempotent_lemma(l));
  for (int r = 0; r <= 4; ++r) CHECK(verify_idempotent_lemma(Weight{r}));
}

TEST_CASE("divided-power images in the Schur algebra") {
  MarginMatrix diag = MarginMatrix::from_rows({{2, 0}, {0, 1}});
  for (auto form : {PBWForm::zbas_a, PBWForm::zbas_b, PBWForm::psa_a, PBWForm::psa_b})
    CHECK(pbw_image(diag, form) == idempotent(Weight{2, 1}));
  // On words 12, 21: e maps both to 11, f maps 11 to 12 + 21, so
  // 1 f e 1 = xi_diag + xi_swap; the e-first product gives the same.
  MarginMatrix swap = MarginMatrix::from_rows({{0, 1}, {1, 0}});
  SchurElement expected = SchurElement::basis(MarginMatrix::from_rows({{1, 0}, {0, 1}})) +
                          SchurElement::basis(swap);
  CHECK(pbw_image(swap, PBWForm::zbas_a) == expected);
  CHECK(pbw_image(swap, PBWForm::zbas_b) == expected);
  CHECK(lambda_plus(swap) == Weight{0, 2});
  CHECK(lambda_minus(swap) == Weight{2, 0});
  CHECK_THROWS_AS(pbw_image(MarginMatrix::from_rows({{-1, 1}, {1, 0}}, MatrixMode::off_diagonal),
                            PBWForm::zbas_a),
                  std::invalid_argument);
}

TEST_CASE("divided-power families are Z-bases of every block") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r) {
      for (const auto& l : compositions(n, r))
        for (const auto& m : compositions(n, r))
          for (auto form : {PBWForm::zbas_a, PBWForm::zbas_b}) {
            auto ch = unimodular_change(pbw_block(l, m, form), hom_basis(l, m));
            CHECK(ch.unimodular);
          }
      std::vector<SchurElement> xi, pa, pb;
      for (const auto& a : theta(n, r)) {
        xi.push_back(SchurElement::basis(a));
        pa.push_back(pbw_image(a, PBWForm::psa_a));
        pb.push_back(pbw_image(a, PBWForm::psa_b));
      }
      CHECK(unimodular_change(pa, xi).unimodular);
      CHECK(unimodular_change(pb, xi).unimodular);
    }
}
