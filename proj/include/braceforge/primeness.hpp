#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "braceforge/ideals.hpp"

namespace braceforge {

// Closure of a family of non-zero ideals under the binary star product.
// Terminates because values live in the finite lattice of additive subgroups.
// The derivation map records one parent pair per non-generator value, enough
// to rebuild an explicit product tree for anything reached.
struct StarClosure {
  std::vector<ElementSet> generators;
  std::set<ElementSet> reached;
  bool contains_zero = false;
  std::map<ElementSet, std::pair<ElementSet, ElementSet>> derivation;
};

StarClosure star_closure(const SkewBrace& a, std::vector<ElementSet> generators);

struct SemiprimeCheck {
  bool holds = false;
  std::optional<ElementSet> witness;  // least failing ideal
};
SemiprimeCheck semiprime_check(const SkewBrace& a);
bool is_semiprime(const SkewBrace& a);

struct PrimeCheck {
  bool holds = false;
  std::optional<std::pair<ElementSet, ElementSet>> witness;
};
PrimeCheck prime_check(const SkewBrace& a);
bool is_prime(const SkewBrace& a);

// Binary product tree over ideal leaves; left/right empty on leaves.
struct ProductTree {
  ElementSet value;
  std::unique_ptr<ProductTree> left;
  std::unique_ptr<ProductTree> right;
  bool is_leaf() const { return !left; }
};

// Rebuilds a tree evaluating to `target` from the closure's derivation map.
ProductTree derivation_tree(const StarClosure& closure, const ElementSet& target);

struct StrongCheck {
  bool holds = false;
  std::optional<ProductTree> witness;  // a product tree evaluating to zero
};
StrongCheck strongly_semiprime_check(const SkewBrace& a);
bool is_strongly_semiprime(const SkewBrace& a);
StrongCheck strongly_prime_check(const SkewBrace& a);
bool is_strongly_prime(const SkewBrace& a);

// All values of star-product trees with at most `depth` leaves drawn from the
// given ideals. Oracle for the closure procedure; depth is capped at 8.
std::set<ElementSet> brute_force_products(const SkewBrace& a,
                                          const std::vector<ElementSet>& ideals,
                                          int depth);

}  // namespace braceforge
