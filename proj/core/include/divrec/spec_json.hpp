#pragma once

// ProductSpec <-> JSON.
//
//   {
//     "shift": 1,
//     "factors": [
//       {"set": {"kind": "multiples", "m": 2},
//        "weight": {"kind": "linear", "c": "-8"}},
//       {"set": {"kind": "residueUnion", "classes": [{"r": 1, "m": 2}]},
//        "weight": {"kind": "linear", "c": "8"}}
//     ]
//   }
//
// Set kinds: "all", "residueUnion" (classes), "multiples" (m), "explicit"
// (members). Weight kinds: "linear" (c) and "table" (values: [{"n", "f"}]).
// Rationals are always strings "p/q" or "p", never JSON numbers.

#include "divrec/product_spec.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace divrec {

/// Malformed spec text. The message carries "line L, column C" for syntax
/// errors and a field path such as "factors[1].set.m" for schema errors.
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::ordered_json to_json(const ProductSpec& spec);

/// Canonical text: two-space indent, trailing newline.
std::string dump_spec(const ProductSpec& spec);

ProductSpec spec_from_json(const nlohmann::json& j);
ProductSpec parse_spec(const std::string& text);

}  // namespace divrec
