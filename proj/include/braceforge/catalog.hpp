#pragma once

#include <string>
#include <vector>

#include "braceforge/brace.hpp"

namespace braceforge {

struct NamedBrace {
  std::string name;
  SkewBrace brace;
};

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

// Built-in braces, sorted by name. Spans orders 1..100 and includes trivial
// and almost trivial braces of the standard small groups, the pair braces
// wt100 / wt-d8 / wt18, the semidirect example sd:c2-c3, exact-factorization
// braces and a few direct products.
const std::vector<NamedBrace>& catalog();
std::vector<std::string> catalog_names();
bool catalog_has(const std::string& name);
const SkewBrace& catalog_brace(const std::string& name);

// Groups addressable by name: cN, dN, s3, q8, a4, a5, c5c4, holP. Parametric
// families are rejected with CapacityError before construction when the order
// would exceed max_order.
const std::vector<NamedGroup>& catalog_groups();
FiniteGroup group_by_name(const std::string& name, int max_order = 1 << 30);

// Builder expression grammar (case-insensitive):
//   <catalog name>
//   triv:<group> | optriv:<group>
//   triple:<group>,<group>,id
//   prod:<expr>|<expr>
//   ef:d6 | ef:d8
//   sd:c2-c3
// Throws InvalidArgumentError on parse failures, CapacityError above the cap.
SkewBrace construct_brace(const std::string& expr,
                          int order_cap = default_order_cap());

}  // namespace braceforge
