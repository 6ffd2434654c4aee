#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "braceforge/brace.hpp"

namespace braceforge {

// Set-theoretic Yang-Baxter solution: a map r on pairs of {0,...,size-1},
// stored row-major at index x*size + y.
struct SetSolution {
  int size = 0;
  std::vector<std::pair<int, int>> r;

  std::pair<int, int> apply(int x, int y) const { return r[x * size + y]; }
};

bool is_bijective(const SetSolution& s);

// For every x the map y -> r(x, y).first permutes the carrier, and for every
// y the map x -> r(x, y).second does too.
bool is_nondegenerate(const SetSolution& s);

// Least (x, y, z) violating (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r).
std::optional<std::array<int, 3>> braid_violation(const SetSolution& s);
bool check_braid(const SetSolution& s);

// r(x, y) = (lambda_x(y), rho_y(x)) with rho_y(x) = inv(lambda_x(y)) o x o y,
// inverse taken in the multiplicative group. Construction verifies
// bijectivity, non-degeneracy and the braid relation.
SetSolution solution_from_brace(const SkewBrace& a);

}  // namespace braceforge
