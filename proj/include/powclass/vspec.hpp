#pragma once

#include <memory>
#include <string>

#include "powclass/vset.hpp"
#include "powclass/weights.hpp"

namespace powclass {

// V-spec mini-language:
//   diag:s=<int>,n=<int>[,q=<int>]     constant vectors; q attaches mod-q
//   weight:n=<int>,h=<int>             binary vectors of weight h (mod 2)
//   comp:q=<int>,h=<int>,<int>,...     fixed composition over mod q
//   squares:n=<int>,h=<int>[,group]    integer vectors of squared norm h
//   file:<path>                        explicit JSON V-set document
// Malformed specs are rejected with position-annotated errors.
std::shared_ptr<const VSet> parse_vspec(const std::string& spec);

// Weight spec: "unit" | "rank_eq:p=<prime>,r=<rank>" | "table:<path>"
// where the table file is a JSON array of {"matrix": [[...]], "value": "p/q"}.
WeightSpec parse_weight_spec(const std::string& spec);

// Matrix literal "<row>;<row>;..." with space-separated label entries,
// e.g. "0 1;1 0". Every row must be a member of V.
MatrixA parse_matrix_literal(const std::string& text,
                             const std::shared_ptr<const VSet>& v);

}  // namespace powclass
