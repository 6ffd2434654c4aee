#pragma once

#include <vector>

#include "braceforge/brace.hpp"

namespace braceforge {

// The four component checks behind the ideal property. A subset is an ideal
// iff all four flags hold.
struct IdealWitness {
  ElementSet subset;
  bool is_add_subgroup = false;
  bool is_lambda_stable = false;
  bool is_add_normal = false;
  bool is_circ_normal = false;

  bool is_ideal() const {
    return is_add_subgroup && is_lambda_stable && is_add_normal && is_circ_normal;
  }
};

// Additive subgroup with lambda_a(S) contained in S for every a.
bool is_left_ideal(const SkewBrace& a, const ElementSet& s);

IdealWitness ideal_witness(const SkewBrace& a, const ElementSet& s);

// Additive subgroup generated by {x * y : x in xs, y in ys}.
ElementSet star_subgroup(const SkewBrace& a, const ElementSet& xs,
                         const ElementSet& ys);

// A^2 = A * A and A^2_op = A *_op A; both verified to be ideals.
ElementSet a_squared(const SkewBrace& a);
ElementSet a_op_squared(const SkewBrace& a);

// Additive subgroup generated by the union of two additive subgroups.
ElementSet subgroup_sum(const SkewBrace& a, const ElementSet& s,
                        const ElementSet& t);
ElementSet subgroup_intersection(const ElementSet& s, const ElementSet& t);

struct BraceWithProjection {
  SkewBrace brace;
  BraceMorphism projection;
};

// Coset brace with minimal-index representatives; axioms validated after
// construction. Throws PreconditionError naming the failing ideal flag.
BraceWithProjection quotient_brace(const SkewBrace& a, const ElementSet& ideal);

// Every ideal, sorted by size then lexicographically.
std::vector<ElementSet> all_ideals(const SkewBrace& a);

// Exactly two ideals. Throws DegenerateError on the order-1 brace.
bool is_simple(const SkewBrace& a);

}  // namespace braceforge
