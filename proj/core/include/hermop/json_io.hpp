#pragma once

// JSON documents for polynomials, Euler factors, and local place data.
//
// All functions exchange JSON as std::string so the JSON library stays an
// implementation detail of this translation unit.  Document shapes:
//
//   polynomial      {"text": "-k*T11",
//                    "terms": [{"monomial": [["T11", 1]],
//                               "coefficient": {"num": [[1, 0, "-1"]],
//                                               "den": [[0, 0, "1"]]}}]}
//     Coefficient entries are [deg_k, deg_s, "rational"] triples of the
//     numerator and denominator polynomials in the parameters k and s.
//     Terms appear in graded-lex descending monomial order.
//
//   euler factor    {"numerator": ["1", "0", "-3"], "denominator": [...]}
//     Coefficient strings in the Gaussian-rational text form, ascending
//     degree in u.
//
//   place           {"type": "split", "q": 2, "n2": 1, "chi_p": "1",
//                    "chi_P": ["1", "1"], "eigenvalues": ["1", "1"]}
//   place list      [place, place, ...]
//
// Emission is deterministic: object keys keep insertion order and term
// order is the canonical one.  Parse failures throw domain_error with the
// offending path in the message ("places[2].eigenvalues: ...").

#include <string>
#include <vector>

#include "hermop/local_factors.hpp"
#include "hermop/multipoly.hpp"

namespace hermop {

std::string multipoly_to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const std::string& text);

std::string euler_factor_to_json(const EulerFactor& f);
EulerFactor euler_factor_from_json(const std::string& text);

std::string local_place_to_json(const LocalPlaceSpec& place);
LocalPlaceSpec local_place_from_json(const std::string& text);
// Parses and validates a JSON array of places; an empty array is allowed.
std::vector<LocalPlaceSpec> places_from_json(const std::string& text);

} // namespace hermop
