#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "monoalg/core.hpp"

namespace monoalg {

// Reads a table in any of these forms:
//   {"n": 4, "f": [0, 0, 0, 1]}    JSON; null marks an undefined entry
//   f: 0 0 0 1                      text; "_" marks an undefined entry
//   [0, 0, 0, 1]                    bare JSON array
//   0 0 0 1                         bare entries
// Throws InvalidInput on anything else.
PartialMonounary parse_partial_table(std::string_view text);

// As above; undefined entries are rejected.
FiniteMonounary parse_table(std::string_view text);

// {"n": 3, "ops": [[2, 2, 1], [1, 0, 0]]}: several total operations.
std::vector<std::vector<Element>> parse_multiunary(std::string_view text);

// Whether `text` is shaped like one of the table forms (as opposed to a
// symbolic expression). Does not validate.
bool looks_like_table(std::string_view text);

std::string to_json(const FiniteMonounary& algebra);
std::string to_json(const PartialMonounary& algebra);

// The relational form as a Graphviz digraph, nodes labeled by index.
std::string to_dot(const FiniteMonounary& algebra);
std::string to_dot(const PartialMonounary& algebra);

}  // namespace monoalg
