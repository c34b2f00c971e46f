#pragma once

#include <nlohmann/json.hpp>

#include "bohr/functions.hpp"

namespace bohr {

// JSON form of a BoundedFunctionSpec: an object with a "kind" discriminator
// and per-kind fields. Complex numbers are [re, im] pairs.
//
//   {"kind": "constant", "c": [1, 0]}
//   {"kind": "monomial", "k": 2}
//   {"kind": "mobius", "a": 0.5, "theta": 0}
//   {"kind": "shifted_mobius", "a": 0.5}
//   {"kind": "blaschke", "zeros": [[0.1, 0.2], ...], "theta": 0}
//   {"kind": "schur", "params": [[0.3, 0], ...]}
//   {"kind": "carlson_odd", "prefix": [[0.5, 0]], "eps": [1, 0]}
//   {"kind": "carlson_even", "prefix": [[0.3, 0], [0.26, 0]], "eps": [-1, 0]}
//
// Optional fields (theta, eps) default as in the struct definitions.

nlohmann::json spec_to_json(const BoundedFunctionSpec& spec);

/// Throws ParseError on malformed input and InvalidSpec on bad parameters.
BoundedFunctionSpec spec_from_json(const nlohmann::json& j);

}  // namespace bohr
