#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braceforge/element_set.hpp"

namespace braceforge {

// Finite group given by its full multiplication table on {0, ..., order-1}.
// Element indices are dense and fixed; every builder documents its labeling.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;
  int identity = 0;
  std::vector<int> inverses;
  std::vector<std::string> labels;  // optional, builder-provided

  int op(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverses[a]; }

  // Checked construction: Latin square, two-sided identity, inverses,
  // associativity over all triples.
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<std::string> labels = {});

  // Construction for tables that are groups by construction (direct products,
  // quotients by a normal subgroup, transposes). check_axioms() still holds
  // on the result; callers are responsible for that guarantee.
  static FiniteGroup trusted(std::vector<std::vector<int>> table,
                             std::vector<std::string> labels = {});

  void check_axioms() const;  // throws AxiomError
  bool is_abelian() const;
  int element_order(int a) const;
  // Multiset of element orders, sorted ascending. Cheap isomorphism invariant.
  std::vector<int> order_profile() const;
};

// Group homomorphism between table groups, stored as an index map.
struct GroupHom {
  int domain_order = 0;
  int codomain_order = 0;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
  bool is_bijective() const;
};

// Checked construction: verifies map[x*y] == map[x]*map[y] on all pairs.
GroupHom make_group_hom(const FiniteGroup& dom, const FiniteGroup& cod,
                        std::vector<int> map);
GroupHom inverse_hom(const GroupHom& h);
GroupHom compose(const GroupHom& second, const GroupHom& first);

// --- builders ---------------------------------------------------------------

// Cyclic group of order n; table[i][j] = (i+j) mod n.
FiniteGroup make_cyclic(int n);

// Dihedral group of order two_n. Indices 0..n-1 are the rotations r^i,
// n..2n-1 are the reflections s r^(i-n).
FiniteGroup make_dihedral(int two_n);

// The order-20 group <a, b | a^5 = b^4 = e, b^-1 a b = a^2>.
// Element a^k b^l has index 4k + l.
FiniteGroup make_presented_c5_c4();

// Hol(C_p) = C_p x| Aut(C_p) for p prime, order p(p-1). Element (x, u),
// acting as y -> g^u y + x for the least primitive root g, has index
// x*(p-1) + u.
FiniteGroup make_holomorph_cp(int p);

// Quaternion group of order 8. Indices 0..7 are 1, i, j, k, -1, -i, -j, -k.
FiniteGroup make_quaternion8();

// Alternating group on n points (n = 4 or 5), elements sorted
// lexicographically as permutation words; composition (p*q)(x) = p(q(x)).
FiniteGroup make_alternating(int n);

// Direct product with pair index i*|h| + j.
FiniteGroup product_group(const FiniteGroup& g, const FiniteGroup& h);

// Opposite group: table transposed.
FiniteGroup opposite_group(const FiniteGroup& g);

// --- subgroup machinery -----------------------------------------------------

// Smallest subgroup containing s (closure under products; contains identity).
ElementSet subgroup_generated(const FiniteGroup& g, const ElementSet& s);

bool is_subgroup(const FiniteGroup& g, const ElementSet& s);

// True iff x s x^-1 = s for all x. Throws PreconditionError if s is not a
// subgroup.
bool is_normal(const FiniteGroup& g, const ElementSet& s);

// Conjugation-stability of an arbitrary subset (no subgroup requirement).
bool is_conjugation_stable(const FiniteGroup& g, const ElementSet& s);

std::vector<ElementSet> conjugacy_classes(const FiniteGroup& g);

// All normal subgroups, found by closing unions of conjugacy classes.
// Sorted by size, then lexicographically.
std::vector<ElementSet> normal_subgroups(const FiniteGroup& g);

// All subgroups by cyclic extension closure. Throws CapacityError above the
// order cap.
std::vector<ElementSet> all_subgroups(const FiniteGroup& g, int order_cap = 200);

ElementSet center(const FiniteGroup& g);

// Subgroup generated by {[x,y] : x in xs, y in ys}, [x,y] = x^-1 y^-1 x y.
ElementSet commutator_of(const FiniteGroup& g, const ElementSet& xs,
                         const ElementSet& ys);
ElementSet commutator_subgroup(const FiniteGroup& g);

struct GroupWithProjection {
  FiniteGroup group;
  GroupHom projection;
};

// Quotient by a normal subgroup; coset representatives are minimal indices,
// quotient elements sorted by representative.
GroupWithProjection quotient_group(const FiniteGroup& g, const ElementSet& n);

GroupWithProjection abelianization(const FiniteGroup& g);

// Length of the derived series to triviality; nullopt when it stalls above
// the trivial subgroup.
std::optional<int> derived_length(const FiniteGroup& g);

// Length of the lower central series to triviality; nullopt when it stalls.
std::optional<int> nilpotency_class(const FiniteGroup& g);

// Lower central series terms, first term the full group, last term stable.
std::vector<ElementSet> lower_central_series(const FiniteGroup& g);

// Small deterministic generating set: least single generator, else least
// generating pair, else greedy extension.
std::vector<int> minimal_generating_set(const FiniteGroup& g);

// Backtracking search over generator images with order-profile pruning.
// Throws CapacityError when either order exceeds order_cap.
std::optional<GroupHom> find_isomorphism(const FiniteGroup& g,
                                         const FiniteGroup& h,
                                         int order_cap = 200);

// Every isomorphism g -> h, in deterministic search order.
std::vector<GroupHom> all_isomorphisms(const FiniteGroup& g,
                                       const FiniteGroup& h,
                                       int order_cap = 200);

std::vector<GroupHom> automorphisms(const FiniteGroup& g, int order_cap = 200);

// Subgroups fixed setwise by every automorphism.
std::vector<ElementSet> characteristic_subgroups(const FiniteGroup& g,
                                                 int order_cap = 200);

// The map Ab(dom) -> Ab(cod) induced by an isomorphism phi: dom -> cod.
std::vector<int> induced_on_abelianization(const FiniteGroup& dom,
                                           const GroupWithProjection& ab_dom,
                                           const FiniteGroup& cod,
                                           const GroupWithProjection& ab_cod,
                                           const GroupHom& phi);

}  // namespace braceforge
