#pragma once

// Config files, polynomial serialization and the polynomial text syntax.
//
//   group config:    {"family": "heisenberg", "n": 1} | {"family": "lattice", "d": 3}
//                    | {"family": "unitriangular", "n": 4}
//   measure config:  {"atoms": [{"coords": [1, 0, 0], "weight": "1/4"}, ...],
//                     "adapted_radius": 4}        (adapted_radius optional)
//   polynomial JSON: [{"exponents": [2, 0, 0], "coeff": "1/1"}, ...] in graded order
//   polynomial text: "x^2 - y^2 + 3/2*x*z", names from GroupSchema::coordinate_names()

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "nilharm/group.hpp"
#include "nilharm/laplacian.hpp"
#include "nilharm/polynomial.hpp"

namespace nilharm::io {

using nlohmann::json;

/// Parses JSON text, turning syntax errors into ValidationError with the
/// line and column of the failure. `source` names the input in messages.
json parse_json(std::string_view text, std::string_view source = "<input>");

GroupSchema group_from_json(const json& j);
json group_to_json(const GroupSchema& schema);

Measure measure_from_json(const GroupSchema& schema, const json& j);
json measure_to_json(const Measure& mu);

json element_to_json(const GroupElement& g);
GroupElement element_from_json(const GroupSchema& schema, const json& j);

json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const GroupSchema& schema, const json& j);

std::string format_polynomial(const Polynomial& p);
/// Throws ValidationError with the column of the first bad token.
Polynomial parse_polynomial(const GroupSchema& schema, std::string_view text);

/// Reads a whole file; throws ValidationError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace nilharm::io
