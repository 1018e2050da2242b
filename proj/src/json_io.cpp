#include "schurlab/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace schurlab {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

int parse_int(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ') s += c;
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + raw + "'");
  }
  if (used != s.size()) throw std::invalid_argument("not an integer: '" + raw + "'");
  return v;
}

}  // namespace

Weight parse_weight(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty weight");
  std::vector<int> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_int(part));
  return Weight(std::move(out));
}

MarginMatrix parse_matrix(const std::string& text, MatrixMode mode) {
  if (!text.empty() && text.front() == '[') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("bad matrix JSON: ") + e.what());
    }
    return matrix_from_json(j, mode);
  }
  std::vector<std::vector<int>> rows;
  for (const auto& row : split(text, ';')) rows.push_back(parse_weight(row).entries());
  return MarginMatrix::from_rows(rows, mode);
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("not a rational: '" + text + "'");
  q.canonicalize();
  return q;
}

Json to_json(const Weight& w) { return Json(w.entries()); }

Json to_json(const MarginMatrix& a) { return Json(a.rows()); }

Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(const Tableau& t) { return Json{{"shape", t.shape}, {"rows", t.rows}}; }

Json to_json(const SchurElement& x) {
  Json terms = Json::array();
  for (const auto& [a, c] : x.terms())
    terms.push_back(
        {{"matrix", to_json(a)}, {"coeff_num", c.get_num().get_str()},
         {"coeff_den", c.get_den().get_str()}});
  return Json{{"n", x.n()}, {"r", x.r()}, {"terms", terms}};
}

Json to_json(const UElement& u) {
  const int n = u.n();
  Json terms = Json::array();
  for (const auto& [m, c] : u.terms()) {
    std::vector<std::vector<int>> f(n, std::vector<int>(n, 0)), e = f;
    std::vector<int> h(n);
    for (int i = 1; i <= n; ++i) {
      h[i - 1] = m.h(i);
      for (int j = i + 1; j <= n; ++j) {
        f[j - 1][i - 1] = m.f(i, j);
        e[i - 1][j - 1] = m.e(i, j);
      }
    }
    terms.push_back({{"f", f}, {"h", h}, {"e", e}, {"coeff", to_json(c)}});
  }
  return Json{{"n", n}, {"terms", terms}};
}

Json to_json(const UdotElement& u) {
  Json terms = Json::array();
  for (const auto& [a, c] : u.terms())
    terms.push_back({{"pattern", to_json(a)}, {"coeff", to_json(c)}});
  return Json{{"lambda", to_json(u.left())}, {"mu", to_json(u.right())}, {"terms", terms}};
}

Json to_json(const Codeterminant& c) {
  return Json{{"shape", to_json(c.shape)},
              {"left", to_json(c.left)},
              {"right", to_json(c.right)},
              {"value", to_json(c.value)}};
}

Weight weight_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("weight must be a JSON array");
  return Weight(j.get<std::vector<int>>());
}

MarginMatrix matrix_from_json(const Json& j, MatrixMode mode) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be a JSON array of rows");
  return MarginMatrix::from_rows(j.get<std::vector<std::vector<int>>>(), mode);
}

namespace {

Rational coeff_from_json(const Json& t) {
  if (t.contains("coeff_num")) {
    Rational q(Integer(t.at("coeff_num").get<std::string>()),
               Integer(t.value("coeff_den", std::string("1"))));
    q.canonicalize();
    return q;
  }
  const Json& c = t.at("coeff");
  if (c.is_number_integer()) return Rational(c.get<long>());
  return parse_rational(c.get<std::string>());
}

}  // namespace

SchurElement schur_from_json(const Json& j) {
  try {
    SchurElement x(j.at("n").get<int>(), j.at("r").get<int>());
    for (const auto& t : j.at("terms")) x.add_term(matrix_from_json(t.at("matrix")), coeff_from_json(t));
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad Schur element JSON: ") + e.what());
  }
}

UdotElement udot_from_json(const Json& j) {
  try {
    UdotElement u(weight_from_json(j.at("lambda")), weight_from_json(j.at("mu")));
    for (const auto& t : j.at("terms")) u.add_term(matrix_from_json(t.at("pattern")), coeff_from_json(t));
    return u;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad U-dot element JSON: ") + e.what());
  }
}

}  // namespace schurlab
