#pragma once

#include <string>

#include "json.hpp"

#include "braceforge/catalog.hpp"
#include "braceforge/primeness.hpp"
#include "braceforge/structure.hpp"
#include "braceforge/ybe.hpp"

namespace braceforge {

// Insertion-ordered JSON keeps report key order stable across runs.
using json = nlohmann::ordered_json;

// Group file format: {"order": n, "table": [[...]], "labels": [...]?}.
json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);
FiniteGroup group_from_file(const std::string& path);

// Brace file format: {"order": n, "add": [[...]], "circ": [[...]]}.
// Reading re-validates all axioms.
json brace_to_json(const SkewBrace& a);
SkewBrace brace_from_json(const json& j, int order_cap = default_order_cap());

// Element sets serialize as sorted index arrays.
json element_set_to_json(const ElementSet& s);

json product_tree_to_json(const ProductTree& t);

// {"semiprime": b, "prime": b, "strongly_semiprime": b, "strongly_prime": b}
// plus witnesses when requested.
json primeness_report(const SkewBrace& a, bool witnesses);

// Full structural report; deterministic for identical inputs.
json analysis_report(const std::string& id, const SkewBrace& a,
                     bool witnesses = false, int iso_cap = 200);

json solution_to_json(const SetSolution& s);

// Reads a file into a string; throws Error on I/O failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Resolves a catalog name, builder expression, or path to a brace JSON file.
SkewBrace load_brace(const std::string& spec,
                     int order_cap = default_order_cap());

}  // namespace braceforge
