#include "schurlab/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "schurlab/codet.hpp"
#include "schurlab/json_io.hpp"
#include "schurlab/linalg.hpp"
#include "schurlab/simples.hpp"
#include "schurlab/verify.hpp"

namespace schurlab {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void print(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Weight composition_arg(const std::string& text, const char* what) {
  Weight w = parse_weight(text);
  if (!w.is_composition())
    throw UsageError(std::string(what) + " must have nonnegative entries: " + w.to_string());
  return w;
}

void check_r(const Weight& w, const std::optional<int>& r) {
  if (r && *r != w.degree())
    throw UsageError("--r " + std::to_string(*r) + " disagrees with the weight sum " +
                     std::to_string(w.degree()));
}

PBWForm form_arg(const std::string& s) {
  if (s == "zbas-a") return PBWForm::zbas_a;
  if (s == "zbas-b") return PBWForm::zbas_b;
  if (s == "psa-a") return PBWForm::psa_a;
  if (s == "psa-b") return PBWForm::psa_b;
  throw UsageError("unknown form '" + s + "' (zbas-a, zbas-b, psa-a, psa-b)");
}

std::string csv_weight(const Weight& w) {
  std::string s = w.to_string();
  return "\"" + s.substr(1, s.size() - 2) + "\"";
}

Json load_json_arg(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad JSON argument: ") + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in Schur algebras and generic Hecke algebras", "schurlab"};
  app.require_subcommand(1);
  int status = 0;

  // compositions
  int comp_n = 0, comp_r = 0;
  bool comp_dominant = false;
  std::string comp_format = "json";
  auto* comp = app.add_subcommand("compositions", "List Lambda(n, r) in reverse-lex order");
  comp->add_option("--n", comp_n)->required()->check(CLI::PositiveNumber);
  comp->add_option("--r", comp_r)->required()->check(CLI::NonNegativeNumber);
  comp->add_flag("--dominant", comp_dominant, "Only dominant compositions");
  comp->add_option("--format", comp_format)->check(CLI::IsMember({"json", "csv"}));

  // dim
  std::string dim_lambda, dim_mu;
  std::optional<int> dim_r;
  auto* dim = app.add_subcommand("dim", "Dimension of 1_lambda S(n,r) 1_mu");
  dim->add_option("--lambda", dim_lambda)->required();
  dim->add_option("--mu", dim_mu, "Defaults to lambda");
  dim->add_option("--r", dim_r);

  // basis
  std::string basis_kind = "xi", basis_lambda, basis_mu, basis_form = "zbas-a";
  auto* basis = app.add_subcommand("basis", "Basis of 1_lambda S(n,r) 1_mu");
  basis->add_option("--kind", basis_kind)->check(CLI::IsMember({"xi", "codet", "pbw"}));
  basis->add_option("--lambda", basis_lambda)->required();
  basis->add_option("--mu", basis_mu, "Defaults to lambda");
  basis->add_option("--form", basis_form, "PBW form: zbas-a, zbas-b, psa-a, psa-b");

  // mul
  std::string mul_a, mul_b;
  auto* mul = app.add_subcommand(
      "mul", "Product of two Schur algebra elements: matrices '1,0;0,1' or element JSON");
  mul->add_option("a", mul_a)->required();
  mul->add_option("b", mul_b)->required();

  // kostka
  std::string k_mu, k_lambda;
  auto* kost = app.add_subcommand("kostka", "Kostka number K_{mu lambda}");
  kost->add_option("--mu", k_mu)->required();
  kost->add_option("--lambda", k_lambda)->required();

  // simples
  std::string s_lambda, s_format = "json";
  std::optional<int> s_window;
  auto* simp = app.add_subcommand("simples", "Index set of simple modules in characteristic 0");
  simp->add_option("--lambda", s_lambda)->required();
  simp->add_option("--window", s_window, "Use the generic algebra with this dominance window");
  simp->add_option("--format", s_format)->check(CLI::IsMember({"json", "csv"}));

  // sym-iso
  int sym_r = 0;
  std::string sym_perm;
  auto* sym = app.add_subcommand("sym-iso", "Images of permutations in 1_omega S(r,r) 1_omega");
  sym->add_option("--r", sym_r)->required()->check(CLI::PositiveNumber);
  sym->add_option("--perm", sym_perm, "One permutation as images, e.g. 2,3,1");

  // udot
  auto* udot = app.add_subcommand("udot", "The modified form U-dot");
  udot->require_subcommand(1);
  std::string um_u, um_v;
  auto* umul = udot->add_subcommand("mul", "Product of two U-dot elements given as JSON");
  umul->add_option("u", um_u)->required();
  umul->add_option("v", um_v)->required();
  std::string ub_lambda, ub_mu, ub_form = "a";
  int ub_degree = 2;
  auto* ubasis = udot->add_subcommand("basis", "Basis of 1_lambda U-dot 1_mu up to a degree");
  ubasis->add_option("--lambda", ub_lambda)->required();
  ubasis->add_option("--mu", ub_mu, "Defaults to lambda");
  ubasis->add_option("--degree", ub_degree)->check(CLI::NonNegativeNumber);
  ubasis->add_option("--form", ub_form, "a: f-first, b: e-first in f-first coordinates")
      ->check(CLI::IsMember({"a", "b"}));
  std::string ug_lambda;
  int ug_degree = 3;
  auto* ugl2 = udot->add_subcommand("gl2-table", "Structure constants of the gl_2 generic algebra");
  ugl2->add_option("--lambda", ug_lambda)->required();
  ugl2->add_option("--degree", ug_degree)->check(CLI::NonNegativeNumber);
  SuiteOptions psi_opts;
  auto* upsi = udot->add_subcommand("verify-psi", "Run the psi suite");
  upsi->add_option("--n", psi_opts.n)->check(CLI::PositiveNumber);
  upsi->add_option("--r", psi_opts.r)->check(CLI::PositiveNumber);
  upsi->add_option("--degree", psi_opts.degree)->check(CLI::NonNegativeNumber);

  // verify
  std::string suite;
  SuiteOptions vopts;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suites));
  verify->add_option("--n", vopts.n)->check(CLI::PositiveNumber);
  verify->add_option("--r", vopts.r)->check(CLI::PositiveNumber);
  verify->add_option("--degree", vopts.degree)->check(CLI::NonNegativeNumber);
  verify->add_option("--window", vopts.window)->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto run_report = [&](const VerificationReport& rep) {
    print(out, rep.to_json());
    err << "wall time: " << std::fixed << std::setprecision(3) << rep.wall_seconds << " s\n";
    return rep.passed() ? 0 : 1;
  };

  try {
    if (*comp) {
      auto list = comp_dominant ? dominant_compositions(comp_n, comp_r) : compositions(comp_n, comp_r);
      if (comp_format == "csv") {
        out << "composition\n";
        for (const auto& w : list) out << csv_weight(w) << "\n";
      } else {
        Json arr = Json::array();
        for (const auto& w : list) arr.push_back(to_json(w));
        print(out, Json{{"n", comp_n}, {"r", comp_r}, {"count", list.size()}, {"compositions", arr}});
      }
    } else if (*dim) {
      Weight l = composition_arg(dim_lambda, "--lambda");
      Weight m = dim_mu.empty() ? l : composition_arg(dim_mu, "--mu");
      if (l.size() != m.size()) throw UsageError("--lambda and --mu have different lengths");
      check_r(l, dim_r);
      check_r(m, dim_r);
      if (l.degree() != m.degree()) throw UsageError("--lambda and --mu have different sums");
      print(out, Json{{"lambda", to_json(l)}, {"mu", to_json(m)},
                      {"dim", margin_matrices(l, m).size()}});
    } else if (*basis) {
      Weight l = composition_arg(basis_lambda, "--lambda");
      Weight m = basis_mu.empty() ? l : composition_arg(basis_mu, "--mu");
      Json arr = Json::array();
      if (basis_kind == "xi") {
        for (const auto& a : margin_matrices(l, m))
          arr.push_back({{"label", to_json(a)}, {"value", to_json(SchurElement::basis(a))}});
      } else if (basis_kind == "codet") {
        for (const auto& c : codet_basis(l, m)) arr.push_back(to_json(c));
      } else {
        PBWForm f = form_arg(basis_form);
        for (const auto& a : margin_matrices(l, m))
          arr.push_back({{"label", to_json(a)}, {"value", to_json(pbw_image(a, f))}});
      }
      Json j{{"kind", basis_kind}, {"lambda", to_json(l)}, {"mu", to_json(m)}};
      if (basis_kind == "pbw") j["form"] = basis_form;
      j["elements"] = arr;
      print(out, j);
    } else if (*mul) {
      auto element = [](const std::string& text) {
        if (!text.empty() && text.front() == '{') return schur_from_json(load_json_arg(text));
        return SchurElement::basis(parse_matrix(text));
      };
      SchurElement x = element(mul_a), y = element(mul_b);
      if (x.n() != y.n() || x.r() != y.r())
        throw UsageError("factors lie in different Schur algebras");
      print(out, to_json(schur_multiply(x, y)));
    } else if (*kost) {
      Weight mu = parse_weight(k_mu), l = parse_weight(k_lambda);
      if (mu.size() < l.size()) {
        std::vector<int> padded(mu.begin(), mu.end());
        padded.resize(l.size(), 0);
        mu = Weight(padded);
      }
      if (!mu.is_partition()) throw UsageError("--mu must be a partition: " + mu.to_string());
      if (!l.is_composition()) throw UsageError("--lambda must be a composition");
      if (mu.size() != l.size()) throw UsageError("--mu is longer than --lambda");
      if (mu.degree() != l.degree()) throw UsageError("--mu and --lambda have different sums");
      print(out, Json{{"mu", to_json(mu)}, {"lambda", to_json(l)}, {"kostka", kostka(mu, l)}});
    } else if (*simp) {
      Weight l = parse_weight(s_lambda);
      SimpleIndexReport rep;
      if (s_window) {
        rep = udot_simple_index_set(l, *s_window);
      } else {
        if (!l.is_composition())
          throw UsageError("--lambda has negative entries; pass --window for the generic algebra");
        rep = simple_index_set(l);
      }
      if (s_format == "csv") {
        out << "mu,multiplicity\n";
        for (const auto& [mu, k] : rep.entries) out << csv_weight(mu) << "," << k << "\n";
      } else {
        Json arr = Json::array();
        for (const auto& [mu, k] : rep.entries)
          arr.push_back({{"mu", to_json(mu)}, {"multiplicity", k}});
        Json j{{"lambda", to_json(l)}};
        if (s_window) j["window"] = *s_window;
        j["simples"] = arr;
        j["dominance_agrees"] = rep.dominance_agrees;
        j["char_p"] = rep.char_p;
        print(out, j);
      }
    } else if (*sym) {
      SymmetricGroupIso iso(sym_r);
      tensor_dimension(sym_r, sym_r);
      std::vector<std::vector<int>> perms;
      if (sym_perm.empty())
        perms = iso.elements();
      else
        perms.push_back(parse_weight(sym_perm).entries());
      Json arr = Json::array();
      for (const auto& p : perms)
        arr.push_back({{"permutation", p}, {"image", to_json(iso.image(p))}});
      print(out, Json{{"r", sym_r}, {"elements", arr}});
    } else if (*umul) {
      UdotElement u = udot_from_json(load_json_arg(um_u));
      UdotElement v = udot_from_json(load_json_arg(um_v));
      print(out, to_json(udot_multiply(u, v)));
    } else if (*ubasis) {
      Weight l = parse_weight(ub_lambda);
      Weight m = ub_mu.empty() ? l : parse_weight(ub_mu);
      if (l.size() != m.size()) throw UsageError("--lambda and --mu have different lengths");
      Json arr = Json::array();
      auto list = ub_form == "a" ? udot_basis_upto(l, m, ub_degree) : udot_basis_b_upto(l, m, ub_degree);
      auto patterns = udot_patterns(l, m, ub_degree);
      for (std::size_t t = 0; t < list.size(); ++t)
        arr.push_back({{"label", to_json(patterns[t])}, {"value", to_json(list[t])}});
      print(out, Json{{"lambda", to_json(l)}, {"mu", to_json(m)}, {"degree", ub_degree},
                      {"form", ub_form}, {"elements", arr}});
    } else if (*ugl2) {
      Weight l = parse_weight(ug_lambda);
      if (l.size() != 2) throw UsageError("gl2-table needs a weight with two entries");
      Gl2Table t = gl2_generic_table(l, ug_degree);
      Json prods = Json::array();
      for (const auto& [ac, coeffs] : t.products) {
        Json c = Json::object();
        for (const auto& [k, q] : coeffs) c[std::to_string(k)] = to_json(q);
        prods.push_back({{"a", ac.first}, {"c", ac.second}, {"product", c}});
      }
      print(out, Json{{"lambda", to_json(l)},
                      {"degree", ug_degree},
                      {"unit", t.unit},
                      {"commutative", t.commutative},
                      {"generated_by_b1", t.generated_by_b1},
                      {"integral", t.integral},
                      {"products", prods}});
      status = t.unit && t.commutative && t.generated_by_b1 && t.integral ? 0 : 1;
    } else if (*upsi) {
      status = run_report(run_suite("psi", psi_opts));
    } else if (*verify) {
      status = run_report(run_suite(suite, vopts));
    }
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}

}  // namespace schurlab
