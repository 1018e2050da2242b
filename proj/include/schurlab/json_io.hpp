#pragma once

// JSON encodings and command-line parsing of weights, matrices and algebra
// elements. Rationals are written as strings "p" or "p/q".

#include <string>

#include <json.hpp>

#include "schurlab/codet.hpp"
#include "schurlab/combinatorics.hpp"
#include "schurlab/pbw.hpp"
#include "schurlab/schur.hpp"
#include "schurlab/udot.hpp"

namespace schurlab {

using Json = nlohmann::ordered_json;

/// "3,2,0" -> (3,2,0). Throws std::invalid_argument on malformed input.
Weight parse_weight(const std::string& text);
/// "1,0;0,1" -> [1,0;0,1]; a JSON array of rows is accepted too.
MarginMatrix parse_matrix(const std::string& text,
                          MatrixMode mode = MatrixMode::nonnegative);
Rational parse_rational(const std::string& text);

Json to_json(const Weight& w);
Json to_json(const MarginMatrix& a);
Json to_json(const Rational& q);
Json to_json(const Tableau& t);
/// {n, r, terms: [{matrix, coeff_num, coeff_den}]}
Json to_json(const SchurElement& x);
/// {n, terms: [{f, h, e, coeff}]}; f holds the exponent of f_ij at (j, i).
Json to_json(const UElement& u);
/// {lambda, mu, terms: [{pattern, coeff}]}
Json to_json(const UdotElement& u);
Json to_json(const Codeterminant& c);

Weight weight_from_json(const Json& j);
MarginMatrix matrix_from_json(const Json& j, MatrixMode mode = MatrixMode::nonnegative);
SchurElement schur_from_json(const Json& j);
UdotElement udot_from_json(const Json& j);

}  // namespace schurlab
