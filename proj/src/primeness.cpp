#include "braceforge/primeness.hpp"

#include <deque>

#include "braceforge/errors.hpp"

namespace braceforge {

namespace {

ElementSet zero_set(const SkewBrace& a) {
  return ElementSet::singleton(a.order(), a.zero());
}

std::vector<ElementSet> nonzero_ideals(const SkewBrace& a) {
  std::vector<ElementSet> out;
  ElementSet zero = zero_set(a);
  for (auto& i : all_ideals(a))
    if (i != zero) out.push_back(i);
  return out;
}

}  // namespace

StarClosure star_closure(const SkewBrace& a, std::vector<ElementSet> generators) {
  ElementSet zero = zero_set(a);
  for (const auto& g : generators) {
    if (g == zero) throw PreconditionError("closure generators must be non-zero");
    if (!ideal_witness(a, g).is_ideal())
      throw PreconditionError("closure generators must be ideals");
  }

  StarClosure c;
  c.generators = generators;
  std::deque<ElementSet> work;
  for (const auto& g : generators)
    if (c.reached.insert(g).second) work.push_back(g);

  while (!work.empty()) {
    ElementSet x = work.front();
    work.pop_front();
    std::vector<ElementSet> snapshot(c.reached.begin(), c.reached.end());
    for (const auto& y : snapshot) {
      for (const auto& [l, r] : {std::pair{x, y}, std::pair{y, x}}) {
        ElementSet z = star_subgroup(a, l, r);
        if (c.reached.insert(z).second) {
          c.derivation.emplace(z, std::pair{l, r});
          work.push_back(z);
        }
      }
    }
  }
  c.contains_zero = c.reached.count(zero) > 0;
  return c;
}

SemiprimeCheck semiprime_check(const SkewBrace& a) {
  ElementSet zero = zero_set(a);
  for (const auto& i : nonzero_ideals(a))
    if (star_subgroup(a, i, i) == zero) return SemiprimeCheck{false, i};
  return SemiprimeCheck{true, std::nullopt};
}

bool is_semiprime(const SkewBrace& a) { return semiprime_check(a).holds; }

PrimeCheck prime_check(const SkewBrace& a) {
  ElementSet zero = zero_set(a);
  auto ideals = nonzero_ideals(a);
  for (const auto& i : ideals)
    for (const auto& j : ideals)
      if (star_subgroup(a, i, j) == zero)
        return PrimeCheck{false, std::pair{i, j}};
  return PrimeCheck{true, std::nullopt};
}

bool is_prime(const SkewBrace& a) { return prime_check(a).holds; }

ProductTree derivation_tree(const StarClosure& closure, const ElementSet& target) {
  if (!closure.reached.count(target))
    throw PreconditionError("target was not reached by the closure");
  ProductTree node;
  node.value = target;
  auto it = closure.derivation.find(target);
  if (it != closure.derivation.end()) {
    node.left = std::make_unique<ProductTree>(derivation_tree(closure, it->second.first));
    node.right = std::make_unique<ProductTree>(derivation_tree(closure, it->second.second));
  }
  return node;
}

StrongCheck strongly_semiprime_check(const SkewBrace& a) {
  ElementSet zero = zero_set(a);
  for (const auto& i : nonzero_ideals(a)) {
    StarClosure c = star_closure(a, {i});
    if (c.contains_zero) return StrongCheck{false, derivation_tree(c, zero)};
  }
  return StrongCheck{true, std::nullopt};
}

bool is_strongly_semiprime(const SkewBrace& a) {
  return strongly_semiprime_check(a).holds;
}

StrongCheck strongly_prime_check(const SkewBrace& a) {
  auto ideals = nonzero_ideals(a);
  if (ideals.empty()) return StrongCheck{true, std::nullopt};
  StarClosure c = star_closure(a, ideals);
  if (c.contains_zero)
    return StrongCheck{false, derivation_tree(c, zero_set(a))};
  return StrongCheck{true, std::nullopt};
}

bool is_strongly_prime(const SkewBrace& a) {
  return strongly_prime_check(a).holds;
}

std::set<ElementSet> brute_force_products(const SkewBrace& a,
                                          const std::vector<ElementSet>& ideals,
                                          int depth) {
  if (depth < 1) throw PreconditionError("product depth must be positive");
  if (depth > 8)
    throw CapacityError("brute-force product enumeration is capped at depth 8");
  // by_leaves[k] = values of trees with exactly k leaves
  std::vector<std::set<ElementSet>> by_leaves(depth + 1);
  for (const auto& i : ideals) by_leaves[1].insert(i);
  for (int k = 2; k <= depth; ++k)
    for (int l = 1; l < k; ++l)
      for (const auto& x : by_leaves[l])
        for (const auto& y : by_leaves[k - l])
          by_leaves[k].insert(star_subgroup(a, x, y));
  std::set<ElementSet> out;
  for (int k = 1; k <= depth; ++k)
    out.insert(by_leaves[k].begin(), by_leaves[k].end());
  return out;
}

}  // namespace braceforge
