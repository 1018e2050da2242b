#include "schurlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "schurlab/linalg.hpp"
#include "schurlab/simples.hpp"

namespace schurlab {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void VerificationReport::add(std::string id, bool ok, std::string detail) {
  checks.push_back(Check{std::move(id), ok, std::move(detail)});
}

Json VerificationReport::to_json() const {
  std::vector<Check> sorted = checks;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Check& a, const Check& b) { return a.id < b.id; });
  Json cs = Json::array();
  std::size_t failed = 0;
  for (const auto& c : sorted) {
    Json j{{"id", c.id}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    cs.push_back(std::move(j));
    if (!c.passed) ++failed;
  }
  return Json{{"suite", suite},
              {"parameters", parameters},
              {"passed", passed()},
              {"checks_run", checks.size()},
              {"checks_failed", failed},
              {"checks", cs},
              {"notes", notes}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gbasis", "codet", "zbas",  "idem-lemma",
                                              "cellular", "relations", "psi", "gl2",
                                              "sym-quotient"};
  return names;
}

namespace {

std::string block_id(const std::string& suite, const Weight& l, const Weight& m) {
  return suite + "/" + l.to_string() + "|" + m.to_string();
}

void require_bounds(const SuiteOptions& o) {
  if (o.n < 1 || o.r < 1 || o.degree < 0 || o.window < 0)
    throw std::invalid_argument("suite bounds must be positive (degree, window >= 0)");
  tensor_dimension(o.n, o.r);
}

// All (n, r) with 1 <= n <= opts.n, 1 <= r <= opts.r.
template <typename F>
void for_sizes(const SuiteOptions& o, F&& f) {
  for (int n = 1; n <= o.n; ++n)
    for (int r = 1; r <= o.r; ++r) f(n, r);
}

void suite_gbasis(VerificationReport& rep, const SuiteOptions& o) {
  for_sizes(o, [&](int n, int r) {
    auto comps = compositions(n, r);
    std::size_t total = 0;
    for (const auto& l : comps)
      for (const auto& m : comps) {
        auto basis = hom_basis(l, m);
        total += basis.size();
        std::size_t rk = exact_rank(basis);
        rep.add(block_id("gbasis", l, m), rk == basis.size(),
                "rank " + std::to_string(rk) + ", |margin matrices| " +
                    std::to_string(basis.size()));
      }
    // 1_l xi_A 1_m is xi_A inside the block and zero outside it.
    bool spans = true;
    std::string witness;
    for (const auto& a : theta(n, r))
      for (const auto& l : comps)
        for (const auto& m : comps) {
          SchurElement x =
              schur_multiply(schur_multiply(idempotent(l), SchurElement::basis(a)), idempotent(m));
          bool inside = a.row_sums() == l && a.col_sums() == m;
          if (!(inside ? x == SchurElement::basis(a) : x.is_zero())) {
            spans = false;
            witness = a.to_string() + " in block " + l.to_string() + "|" + m.to_string();
          }
        }
    std::string size = "n=" + std::to_string(n) + ",r=" + std::to_string(r);
    rep.add("gbasis/blocks/" + size, spans, witness);
    Integer expected = binomial(n * n + r - 1, r);
    rep.add("gbasis/dimension/" + size, Integer(static_cast<unsigned long>(total)) == expected,
            "sum of block sizes " + std::to_string(total) + ", binomial " + expected.get_str());
    rep.add("gbasis/unit/" + size, to_endo(schur_identity(n, r)) == identity_endo(n, r));
  });
}

void suite_codet(VerificationReport& rep, const SuiteOptions& o) {
  for_sizes(o, [&](int n, int r) {
    auto comps = compositions(n, r);
    for (const auto& l : comps)
      for (const auto& m : comps) {
        std::vector<SchurElement> values;
        for (const auto& c : codet_basis(l, m)) values.push_back(c.value);
        std::size_t dim = margin_matrices(l, m).size();
        std::size_t rk = exact_rank(values);
        rep.add(block_id("codet/rank", l, m), values.size() == dim && rk == dim,
                std::to_string(values.size()) + " codeterminants, rank " + std::to_string(rk) +
                    ", dim " + std::to_string(dim));
        auto change = unimodular_change(values, hom_basis(l, m));
        rep.add(block_id("codet/integral", l, m), change.unimodular,
                "determinant " + change.determinant.get_str());
      }
  });
}

void suite_zbas(VerificationReport& rep, const SuiteOptions& o) {
  for_sizes(o, [&](int n, int r) {
    auto comps = compositions(n, r);
    for (const auto& l : comps)
      for (const auto& m : comps)
        for (auto [form, name] : {std::pair{PBWForm::zbas_a, "f-first"},
                                  std::pair{PBWForm::zbas_b, "e-first"}}) {
          auto change = unimodular_change(pbw_block(l, m, form), hom_basis(l, m));
          rep.add(block_id(std::string("zbas/") + name, l, m), change.unimodular,
                  "determinant " + change.determinant.get_str());
        }
    std::vector<SchurElement> xi;
    auto all = theta(n, r);
    for (const auto& a : all) xi.push_back(SchurElement::basis(a));
    for (auto [form, name] : {std::pair{PBWForm::psa_a, "psa-f-first"},
                              std::pair{PBWForm::psa_b, "psa-e-first"}}) {
      std::vector<SchurElement> fam;
      for (const auto& a : all) fam.push_back(pbw_image(a, form));
      auto change = unimodular_change(fam, xi);
      rep.add("zbas/" + std::string(name) + "/n=" + std::to_string(n) + ",r=" + std::to_string(r),
              change.unimodular, "determinant " + change.determinant.get_str());
    }
  });
}

void suite_idem(VerificationReport& rep, const SuiteOptions& o) {
  for_sizes(o, [&](int n, int r) {
    for (const auto& l : compositions(n, r))
      rep.add("idem-lemma/" + l.to_string(), verify_idempotent_lemma(l));
  });
}

void add_cell(VerificationReport& rep, const std::string& id, const CellReport& c) {
  auto one = [&](const std::string& axiom, const AxiomResult& a) {
    rep.add(id + "/" + axiom, a.passed, a.witnesses.empty() ? "" : a.witnesses.front());
  };
  one("basis", c.basis);
  one("involution", c.involution);
  one("multiplication", c.multiplication);
  one("ideals", c.ideal_filtration);
  one("truncation", c.truncation);
}

void suite_cellular(VerificationReport& rep, const SuiteOptions& o) {
  std::size_t opposite_failures = 0, total = 0;
  for_sizes(o, [&](int n, int r) {
    for (const auto& l : compositions(n, r)) {
      add_cell(rep, "cellular/" + l.to_string(), cell_datum_check(l));
      ++total;
      if (!cell_datum_check(l, CellOrder::dominant_is_lower).passed()) ++opposite_failures;
    }
    add_cell(rep, "cellular/full/n=" + std::to_string(n) + ",r=" + std::to_string(r),
             cell_datum_check_full(n, r));
  });
  rep.notes.push_back("higher cells are the strictly more dominant shapes; with the opposite "
                      "convention the axioms fail for " +
                      std::to_string(opposite_failures) + " of " + std::to_string(total) +
                      " weights");
}

void suite_relations(VerificationReport& rep, const SuiteOptions& o) {
  std::size_t literal_failures = 0, total = 0;
  for (int n = 2; n <= std::max(2, o.n); ++n) {
    for (const auto& rc : commutator_relations(n, o.window)) {
      std::string id = "relations/" + rc.lambda.to_string() + "/i=" + std::to_string(rc.i) +
                       ",j=" + std::to_string(rc.j);
      rep.add(id + "/commutator", rc.pairing_holds,
              rc.pairing_holds ? "" : to_json(rc.commutator).dump());
      rep.add(id + "/idempotents", rc.idempotent_moves);
      ++total;
      if (!rc.literal_holds) ++literal_failures;
    }
  }
  rep.notes.push_back(
      "commutator compared with delta_ij (lambda_i - lambda_{i+1}) 1_lambda; reading the scalar "
      "as the plain coordinate lambda_i fails in " +
      std::to_string(literal_failures) + " of " + std::to_string(total) + " cases");
}

void suite_psi(VerificationReport& rep, const SuiteOptions& o) {
  for_sizes(o, [&](int n, int r) {
    auto comps = compositions(n, r);
    for (const auto& l : comps) {
      rep.add("psi/unit/" + l.to_string(), psi(UdotElement::idempotent(l), r) == idempotent(l));
      for (const auto& m : comps) {
        auto labels = margin_matrices(l, m);
        std::vector<SchurElement> images;
        for (const auto& u : udot_basis_upto(l, m, r)) images.push_back(psi(u, r));
        std::size_t rk = exact_rank(images);
        IntegerMatrix rows;
        bool integral = true;
        for (const auto& x : images) {
          integral = integral && x.is_integral();
          std::vector<Integer> row;
          for (const auto& a : labels) row.push_back(x.coefficient(a).get_num());
          rows.push_back(std::move(row));
        }
        bool lattice = integral && spans_integer_lattice(rows, labels.size());
        rep.add(block_id("psi/onto", l, m), rk == labels.size() && lattice,
                "rank " + std::to_string(rk) + " of " + std::to_string(labels.size()) +
                    (lattice ? "" : ", integer span is a proper sublattice"));
      }
    }
    // Multiplicativity on composable pairs of bounded degree.
    for (const auto& l : comps)
      for (const auto& m : comps) {
        auto left = udot_basis_upto(l, m, o.degree);
        for (const auto& k : comps) {
          auto right = udot_basis_upto(m, k, o.degree);
          bool ok = true;
          std::string witness;
          for (const auto& u : left)
            for (const auto& v : right) {
              if (psi(udot_multiply(u, v), r) == schur_multiply(psi(u, r), psi(v, r))) continue;
              ok = false;
              witness = to_json(u).dump() + " * " + to_json(v).dump();
            }
          rep.add("psi/multiplicative/" + l.to_string() + "|" + m.to_string() + "|" +
                      k.to_string(),
                  ok, witness);
        }
      }
    // Outside Lambda(n, r) the image is zero.
    if (n >= 2) {
      std::vector<int> neg(n, 0);
      neg[0] = r + 1;
      neg[1] = -1;
      Weight outside(neg);
      rep.add("psi/outside/n=" + std::to_string(n) + ",r=" + std::to_string(r),
              psi(UdotElement::idempotent(outside), r).is_zero());
    }
  });
}

void suite_gl2(VerificationReport& rep, const SuiteOptions& o) {
  const int d = o.degree + 2;
  for (int a = -o.window; a <= o.window; ++a)
    for (int b = -o.window; b <= o.window; ++b) {
      Weight l{a, b};
      Gl2Table t = gl2_generic_table(l, d);
      std::string id = "gl2/table/" + l.to_string();
      rep.add(id + "/unit", t.unit);
      rep.add(id + "/commutative", t.commutative);
      rep.add(id + "/generated-by-b1", t.generated_by_b1);
      rep.add(id + "/integral", t.integral);
    }
  for (int r = 1; r <= std::max(o.r, 4); ++r)
    for (const auto& l : compositions(2, r)) {
      const int top = std::min(l[0], l[1]);
      std::vector<SchurElement> images;
      std::vector<UdotElement> bs;
      for (int a = 0; a <= top + 1; ++a) {
        bs.push_back(UdotElement::basis(ExponentPattern(2, {0, a, a, 0}), l));
        images.push_back(psi(bs.back(), r));
      }
      std::size_t rk = exact_rank(images);
      // e^(a) 1_lambda = 0 once a > lambda_2; otherwise only dependence
      rep.add("gl2/dimension/" + l.to_string(),
              rk == static_cast<std::size_t>(1 + top) &&
                  (l[0] < l[1] || images.back().is_zero()),
              "rank " + std::to_string(rk) + ", expected " + std::to_string(1 + top));
      bool mult = true;
      for (const auto& u : bs)
        for (const auto& v : bs)
          mult = mult && psi(udot_multiply(u, v), r) == schur_multiply(psi(u, r), psi(v, r));
      rep.add("gl2/psi-table/" + l.to_string(), mult);
    }
}

void suite_sym(VerificationReport& rep, const SuiteOptions& o) {
  for (int r = 1; r <= std::min(o.r, 4); ++r) {
    SymmetricQuotientReport s = u0_symmetric_group(r);
    std::string id = "sym-quotient/r=" + std::to_string(r);
    rep.add(id + "/rank", s.rank == s.expected_rank,
            "rank " + std::to_string(s.rank) + " of " + std::to_string(s.expected_rank));
    rep.add(id + "/integer-onto", s.integer_surjective);
    rep.add(id + "/multiplicative", s.multiplicative,
            s.witnesses.empty() ? "" : s.witnesses.front());
    rep.add(id + "/group-table", s.group_table);
    SymmetricGroupIso iso(r);
    bool round_trip = true;
    for (const auto& pi : iso.elements()) {
      auto back = iso.preimage(iso.image(pi));
      round_trip = round_trip && back.size() == 1 && back.begin()->first == pi &&
                   back.begin()->second == 1;
    }
    rep.add(id + "/round-trip", round_trip);
  }
}

}  // namespace

VerificationReport run_suite(const std::string& name, const SuiteOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.suite = name;
  rep.parameters = Json{{"n", opts.n}, {"r", opts.r}, {"degree", opts.degree},
                        {"window", opts.window}};
  if (name == "all") {
    for (const auto& s : suite_names()) {
      VerificationReport sub = run_suite(s, opts);
      for (auto& c : sub.checks) rep.checks.push_back(std::move(c));
      for (auto& n : sub.notes) rep.notes.push_back(s + ": " + n);
    }
  } else {
    require_bounds(opts);
    if (name == "gbasis")
      suite_gbasis(rep, opts);
    else if (name == "codet")
      suite_codet(rep, opts);
    else if (name == "zbas")
      suite_zbas(rep, opts);
    else if (name == "idem-lemma")
      suite_idem(rep, opts);
    else if (name == "cellular")
      suite_cellular(rep, opts);
    else if (name == "relations")
      suite_relations(rep, opts);
    else if (name == "psi")
      suite_psi(rep, opts);
    else if (name == "gl2")
      suite_gl2(rep, opts);
    else if (name == "sym-quotient")
      suite_sym(rep, opts);
    else
      throw std::invalid_argument("unknown suite '" + name + "'");
  }
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace schurlab
