#pragma once

#include <string>
#include <vector>

#include "braceforge/ideals.hpp"

namespace braceforge {

// Classification datum of a weakly trivial brace: two groups together with an
// isomorphism of their abelianizations.
struct Triple {
  FiniteGroup g;
  FiniteGroup h;
  FiniteGroup ab_g;
  FiniteGroup ab_h;
  GroupHom g_proj;  // g -> ab_g
  GroupHom h_proj;  // h -> ab_h
  GroupHom theta;   // ab_g -> ab_h, bijective
};

// Builds quotient data and checks that theta is an isomorphism.
Triple make_triple(const FiniteGroup& g, const FiniteGroup& h,
                   const std::vector<int>& theta_on_ab);
// Identity theta; requires literally equal abelianization tables.
Triple make_triple_id(const FiniteGroup& g, const FiniteGroup& h);

enum class SeriesKind { left, right, strong, derived };
std::string series_kind_name(SeriesKind k);

// Descending series of star-generated subgroups. Terms strictly decrease and
// end at the stable value; length is the number of steps to reach it.
struct SeriesReport {
  SeriesKind kind;
  std::vector<ElementSet> terms;
  bool stabilized = false;
  bool reaches_zero = false;
  int length = 0;
};

SeriesReport series(const SkewBrace& a, SeriesKind kind);

bool is_left_nilpotent(const SkewBrace& a);
bool is_right_nilpotent(const SkewBrace& a);
bool is_strongly_nilpotent(const SkewBrace& a);
bool is_soluble(const SkewBrace& a);

// A^2 and A^2_op intersect trivially.
bool is_weakly_trivial(const SkewBrace& a);

// Quotient by A^2 n A^2_op; always weakly trivial.
BraceWithProjection weakly_trivial_quotient(const SkewBrace& a);

// Injective morphism of a weakly trivial brace into A/A^2 x A/A^2_op, with
// surjective projections onto both factors.
struct SubdirectEmbedding {
  BraceWithProjection q1;  // A / A^2
  BraceWithProjection q2;  // A / A^2_op
  SkewBrace product;
  BraceMorphism embedding;
};
SubdirectEmbedding subdirect_embedding(const SkewBrace& a);

// Fibered product {(x, y) : f(x) = g(y)} inside a x b, with projections.
struct Pullback {
  SkewBrace brace;
  std::vector<int> elements;  // new index -> pair index i*|b| + j
  BraceMorphism to_a;
  BraceMorphism to_b;
};
Pullback pullback(const SkewBrace& a, const SkewBrace& b, const SkewBrace& c,
                  const BraceMorphism& f, const BraceMorphism& g);

// Goursat datum of a subdirect product: ideals of both factors and the graph
// isomorphism between the quotients.
struct GoursatDatum {
  ElementSet i;  // ideal of a
  ElementSet j;  // ideal of b
  BraceWithProjection a_quot;
  BraceWithProjection b_quot;
  BraceMorphism rho;  // a_quot -> b_quot, bijective
};

// c_sub indexes pairs of a x b (pair index i*|b| + j). Requires a sub-brace
// projecting onto both factors.
GoursatDatum goursat_decompose(const SkewBrace& a, const SkewBrace& b,
                               const ElementSet& c_sub);

// Pair set {(x, y) : rho(x + I) = y + J} realizing a Goursat datum.
ElementSet goursat_subset(const SkewBrace& a, const SkewBrace& b,
                          const GoursatDatum& d);

// Pullback of Triv(G) -> Triv(Ab G) ~ opTriv(Ab H) <- opTriv(H); the result
// is verified weakly trivial.
struct TripleBrace {
  SkewBrace brace;
  SkewBrace triv_g;
  SkewBrace optriv_h;
  BraceMorphism to_triv_g;
  BraceMorphism to_optriv_h;
};
TripleBrace triple_to_brace(const Triple& t);

// Associated triple ((A/A^2, o), (A/A^2_op, o), theta) of a weakly trivial
// brace, theta induced through the common quotient.
Triple brace_to_triple(const SkewBrace& a);

// Searches isomorphism pairs making the abelianization square commute.
bool triples_equivalent(const Triple& t1, const Triple& t2, int order_cap = 200);

enum class SimpleTwoSidedClass {
  trivial_of_simple,
  almost_trivial_of_simple,
  two_sided_brace,
};
std::string simple_two_sided_class_name(SimpleTwoSidedClass c);

// Requires a simple two-sided brace; tags it by whether A^2 or A^2_op vanish.
SimpleTwoSidedClass classify_simple_two_sided(const SkewBrace& a);

// Subsets closed under both operations, via additive subgroup enumeration.
std::vector<ElementSet> sub_skew_braces(const SkewBrace& a, int order_cap = 200);

}  // namespace braceforge
