#pragma once

#include <array>
#include <optional>
#include <vector>

#include "braceforge/group.hpp"

namespace braceforge {

// Default cap on brace orders for the cubic axiom checks. Reads
// BRACEFORGE_ORDER_CAP once per process; falls back to 512.
int default_order_cap();

// Skew brace (A, +, o): two group structures on one carrier, sharing the
// identity and linked by a o (b + c) = a o b - a + a o c.
struct SkewBrace {
  FiniteGroup add;
  FiniteGroup circ;

  int order() const { return add.order; }
  int zero() const { return add.identity; }

  int plus(int a, int b) const { return add.op(a, b); }
  int neg(int a) const { return add.inv(a); }
  int times(int a, int b) const { return circ.op(a, b); }
  int circ_inv(int a) const { return circ.inv(a); }

  // lambda_a(b) = -a + a o b
  int lambda(int a, int b) const { return plus(neg(a), times(a, b)); }
  // lambda^op_a(b) = a o b - a
  int lambda_op(int a, int b) const { return plus(times(a, b), neg(a)); }
  // a * b = lambda_a(b) - b
  int star(int a, int b) const { return plus(lambda(a, b), neg(b)); }
  // a *_op b = -b + a o b - a
  int star_op(int a, int b) const {
    return plus(plus(neg(b), times(a, b)), neg(a));
  }
};

// Least triple (a, b, c) violating a o (b + c) = a o b - a + a o c, if any.
std::optional<std::array<int, 3>> left_brace_violation(const FiniteGroup& add,
                                                       const FiniteGroup& circ);

// Checked construction: same order, shared identity, left brace equation over
// all triples. Throws AxiomError with the least witness, CapacityError above
// the order cap.
SkewBrace validate_skew_brace(FiniteGroup add, FiniteGroup circ,
                              int order_cap = default_order_cap());

// Triv(G): both operations equal to the group's.
SkewBrace trivial_brace(const FiniteGroup& g);

// Additive group replaced by its opposite; an involution.
SkewBrace opposite(const SkewBrace& a);

// opTriv(G) = opposite(Triv(G)).
SkewBrace almost_trivial(const FiniteGroup& g);

// Least triple violating (a + b) o c = a o c - c + b o c, if any.
std::optional<std::array<int, 3>> right_brace_violation(const SkewBrace& a);
bool is_two_sided(const SkewBrace& a);

// Least (g, x, y) where conjugation by g in (A, o) fails to preserve +.
std::optional<std::array<int, 3>> inner_automorphism_violation(const SkewBrace& a);
bool is_two_sided_via_inner(const SkewBrace& a);

// Componentwise product on pair indices i*|b| + j.
SkewBrace direct_product(const SkewBrace& a, const SkewBrace& b);

// Semidirect product on pair indices: (a, x) + (a', x') = (a + a', x + x'),
// (a, x) o (a', x') = (a o a', x o action[a](x')). The action must send each
// element of A to a brace automorphism of B, multiplicatively in (A, o).
SkewBrace semidirect_product(const SkewBrace& a, const SkewBrace& b,
                             const std::vector<std::vector<int>>& action);

// Brace on G from an exact factorization G = BC: x + y = xy and
// x o y = b_x y c_x where x = b_x c_x. Axioms validated after construction.
SkewBrace from_exact_factorization(const FiniteGroup& g, const ElementSet& b,
                                   const ElementSet& c);

// Sub skew brace on a subset closed under both operations. The brace axioms
// restrict from the ambient brace; only closure and the identity are checked.
struct SubBrace {
  SkewBrace brace;
  std::vector<int> elements;  // new index -> ambient index, ascending
};
SubBrace restrict_to(const SkewBrace& a, const ElementSet& s);

// Map preserving + and o pointwise.
struct BraceMorphism {
  int domain_order = 0;
  int codomain_order = 0;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
  bool is_bijective() const;
};

BraceMorphism make_brace_morphism(const SkewBrace& dom, const SkewBrace& cod,
                                  std::vector<int> map);

bool is_brace_automorphism(const SkewBrace& a, const std::vector<int>& map);

// Backtracking over circ-generator images, pruned by (add, circ) order pairs.
std::optional<BraceMorphism> find_brace_isomorphism(const SkewBrace& a,
                                                    const SkewBrace& b,
                                                    int order_cap = 200);

// Jacobson radical ring: abelian additive group with associative bi-additive
// multiplication whose circle operation a o b = a + b + a*b is a group.
struct RadicalRing {
  int order = 0;
  FiniteGroup add;
  std::vector<std::vector<int>> mult;
};

// Requires a two-sided brace of abelian type; the ring multiplication is the
// star operation. Verifies associativity, bi-additivity and the circle law.
RadicalRing to_radical_ring(const SkewBrace& a);

}  // namespace braceforge
