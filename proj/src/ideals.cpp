#include "braceforge/ideals.hpp"

#include <algorithm>

#include "braceforge/errors.hpp"

namespace braceforge {

bool is_left_ideal(const SkewBrace& a, const ElementSet& s) {
  if (!is_subgroup(a.add, s)) return false;
  for (int x = 0; x < a.order(); ++x)
    for (int v : s.indices())
      if (!s.contains(a.lambda(x, v))) return false;
  return true;
}

IdealWitness ideal_witness(const SkewBrace& a, const ElementSet& s) {
  IdealWitness w;
  w.subset = s;
  w.is_add_subgroup = is_subgroup(a.add, s);
  w.is_lambda_stable = true;
  for (int x = 0; x < a.order() && w.is_lambda_stable; ++x)
    for (int v : s.indices())
      if (!s.contains(a.lambda(x, v))) {
        w.is_lambda_stable = false;
        break;
      }
  w.is_add_normal = is_conjugation_stable(a.add, s);
  w.is_circ_normal = is_conjugation_stable(a.circ, s);
  return w;
}

ElementSet star_subgroup(const SkewBrace& a, const ElementSet& xs,
                         const ElementSet& ys) {
  ElementSet gens(a.order());
  for (int x : xs.indices())
    for (int y : ys.indices()) gens.insert(a.star(x, y));
  return subgroup_generated(a.add, gens);
}

ElementSet a_squared(const SkewBrace& a) {
  ElementSet full = ElementSet::full(a.order());
  ElementSet sq = star_subgroup(a, full, full);
  if (!ideal_witness(a, sq).is_ideal())
    throw ConsistencyError("A*A is not an ideal");
  return sq;
}

ElementSet a_op_squared(const SkewBrace& a) {
  ElementSet full = ElementSet::full(a.order());
  ElementSet sq = star_subgroup(opposite(a), full, full);
  if (!ideal_witness(a, sq).is_ideal())
    throw ConsistencyError("A*_op A is not an ideal");
  return sq;
}

ElementSet subgroup_sum(const SkewBrace& a, const ElementSet& s,
                        const ElementSet& t) {
  if (!is_subgroup(a.add, s) || !is_subgroup(a.add, t))
    throw PreconditionError("subgroup sum requires additive subgroups");
  return subgroup_generated(a.add, s.unite(t));
}

ElementSet subgroup_intersection(const ElementSet& s, const ElementSet& t) {
  return s.intersect(t);
}

BraceWithProjection quotient_brace(const SkewBrace& a, const ElementSet& ideal) {
  IdealWitness w = ideal_witness(a, ideal);
  if (!w.is_ideal()) {
    std::string why = !w.is_add_subgroup  ? "not an additive subgroup"
                      : !w.is_lambda_stable ? "not lambda-stable"
                      : !w.is_add_normal    ? "not normal in the additive group"
                                            : "not normal in the multiplicative group";
    throw PreconditionError("quotient requires an ideal: subset is " + why);
  }

  const int n = a.order();
  std::vector<int> rep(n);
  for (int x = 0; x < n; ++x) {
    int r = x;
    for (int v : ideal.indices()) r = std::min(r, a.plus(x, v));
    rep[x] = r;
  }
  std::vector<int> reps;
  for (int x = 0; x < n; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<int> cls(n, -1);
  for (int i = 0; i < static_cast<int>(reps.size()); ++i) cls[reps[i]] = i;

  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> add(m, std::vector<int>(m));
  std::vector<std::vector<int>> circ(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      add[i][j] = cls[rep[a.plus(reps[i], reps[j])]];
      circ[i][j] = cls[rep[a.times(reps[i], reps[j])]];
    }
  SkewBrace q = validate_skew_brace(FiniteGroup::from_table(std::move(add)),
                                    FiniteGroup::from_table(std::move(circ)));

  std::vector<int> proj(n);
  for (int x = 0; x < n; ++x) proj[x] = cls[rep[x]];
  BraceMorphism hom = make_brace_morphism(a, q, std::move(proj));
  return BraceWithProjection{std::move(q), std::move(hom)};
}

std::vector<ElementSet> all_ideals(const SkewBrace& a) {
  std::vector<ElementSet> out;
  for (const auto& s : normal_subgroups(a.add)) {
    IdealWitness w = ideal_witness(a, s);
    if (w.is_ideal()) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), ElementSetSizeLexLess{});
  return out;
}

bool is_simple(const SkewBrace& a) {
  if (a.order() < 2)
    throw DegenerateError("simplicity is undefined for the order-1 brace");
  return all_ideals(a).size() == 2;
}

}  // namespace braceforge
