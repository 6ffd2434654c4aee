#include "braceforge/brace.hpp"

#include <algorithm>
#include <cstdlib>

#include "braceforge/errors.hpp"

namespace braceforge {

int default_order_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("BRACEFORGE_ORDER_CAP")) {
      int v = std::atoi(env);
      if (v >= 1) return v;
    }
    return 512;
  }();
  return cap;
}

std::optional<std::array<int, 3>> left_brace_violation(const FiniteGroup& add,
                                                       const FiniteGroup& circ) {
  const int n = add.order;
  for (int a = 0; a < n; ++a) {
    const int na = add.inv(a);
    for (int b = 0; b < n; ++b) {
      const int ab = circ.op(a, b);
      const int lhs_left = add.op(ab, na);
      for (int c = 0; c < n; ++c)
        if (circ.op(a, add.op(b, c)) != add.op(lhs_left, circ.op(a, c)))
          return std::array<int, 3>{a, b, c};
    }
  }
  return std::nullopt;
}

SkewBrace validate_skew_brace(FiniteGroup add, FiniteGroup circ, int order_cap) {
  if (add.order != circ.order)
    throw AxiomError("additive and multiplicative groups have different orders");
  if (add.order > order_cap)
    throw CapacityError("brace order " + std::to_string(add.order) +
                        " exceeds cap " + std::to_string(order_cap));
  if (add.identity != circ.identity)
    throw AxiomError("identity elements differ",
                     {add.identity, circ.identity, -1});
  if (auto w = left_brace_violation(add, circ))
    throw AxiomError("left brace equation fails", *w);
  return SkewBrace{std::move(add), std::move(circ)};
}

SkewBrace trivial_brace(const FiniteGroup& g) { return SkewBrace{g, g}; }

SkewBrace opposite(const SkewBrace& a) {
  return SkewBrace{opposite_group(a.add), a.circ};
}

SkewBrace almost_trivial(const FiniteGroup& g) {
  return opposite(trivial_brace(g));
}

std::optional<std::array<int, 3>> right_brace_violation(const SkewBrace& a) {
  const int n = a.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int sum = a.plus(x, y);
      for (int c = 0; c < n; ++c)
        if (a.times(sum, c) !=
            a.plus(a.plus(a.times(x, c), a.neg(c)), a.times(y, c)))
          return std::array<int, 3>{x, y, c};
    }
  return std::nullopt;
}

bool is_two_sided(const SkewBrace& a) { return !right_brace_violation(a); }

std::optional<std::array<int, 3>> inner_automorphism_violation(const SkewBrace& a) {
  const int n = a.order();
  std::vector<int> conj(n);
  for (int g = 0; g < n; ++g) {
    const int gi = a.circ_inv(g);
    for (int x = 0; x < n; ++x) conj[x] = a.times(a.times(g, x), gi);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (conj[a.plus(x, y)] != a.plus(conj[x], conj[y]))
          return std::array<int, 3>{g, x, y};
  }
  return std::nullopt;
}

bool is_two_sided_via_inner(const SkewBrace& a) {
  return !inner_automorphism_violation(a);
}

SkewBrace direct_product(const SkewBrace& a, const SkewBrace& b) {
  return SkewBrace{product_group(a.add, b.add), product_group(a.circ, b.circ)};
}

SkewBrace semidirect_product(const SkewBrace& a, const SkewBrace& b,
                             const std::vector<std::vector<int>>& action) {
  if (static_cast<int>(action.size()) != a.order())
    throw PreconditionError("action must assign a map to every element");
  for (const auto& m : action)
    if (!is_brace_automorphism(b, m))
      throw PreconditionError("action value is not a brace automorphism");
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y) {
      const auto& lhs = action[a.times(x, y)];
      for (int v = 0; v < b.order(); ++v)
        if (lhs[v] != action[x][action[y][v]])
          throw PreconditionError("action is not multiplicative");
    }

  const int nb = b.order();
  const int n = a.order() * nb;
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  std::vector<std::vector<int>> circ(n, std::vector<int>(n));
  for (int i1 = 0; i1 < a.order(); ++i1)
    for (int j1 = 0; j1 < nb; ++j1)
      for (int i2 = 0; i2 < a.order(); ++i2)
        for (int j2 = 0; j2 < nb; ++j2) {
          add[i1 * nb + j1][i2 * nb + j2] =
              a.plus(i1, i2) * nb + b.plus(j1, j2);
          circ[i1 * nb + j1][i2 * nb + j2] =
              a.times(i1, i2) * nb + b.times(j1, action[i1][j2]);
        }
  return validate_skew_brace(FiniteGroup::trusted(std::move(add)),
                             FiniteGroup::from_table(std::move(circ)));
}

SkewBrace from_exact_factorization(const FiniteGroup& g, const ElementSet& b,
                                   const ElementSet& c) {
  if (!is_subgroup(g, b) || !is_subgroup(g, c))
    throw PreconditionError("exact factorization requires two subgroups");
  std::vector<int> b_part(g.order, -1), c_part(g.order, -1);
  for (int x : b.indices())
    for (int y : c.indices()) {
      int a = g.op(x, y);
      if (b_part[a] != -1)
        throw PreconditionError("factorization is not exact: duplicate product");
      b_part[a] = x;
      c_part[a] = y;
    }
  for (int a = 0; a < g.order; ++a)
    if (b_part[a] == -1)
      throw PreconditionError("factorization is not exact: element not covered");

  std::vector<std::vector<int>> circ(g.order, std::vector<int>(g.order));
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      circ[x][y] = g.op(g.op(b_part[x], y), c_part[x]);
  return validate_skew_brace(g, FiniteGroup::from_table(std::move(circ)));
}

SubBrace restrict_to(const SkewBrace& a, const ElementSet& s) {
  if (s.carrier_order() != a.order())
    throw PreconditionError("subset lives on a different carrier");
  if (!s.contains(a.zero()))
    throw PreconditionError("subset does not contain the identity");
  auto elems = s.indices();
  const int m = static_cast<int>(elems.size());
  std::vector<int> local(a.order(), -1);
  for (int i = 0; i < m; ++i) local[elems[i]] = i;

  std::vector<std::vector<int>> add(m, std::vector<int>(m));
  std::vector<std::vector<int>> circ(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = a.plus(elems[i], elems[j]);
      int t = a.times(elems[i], elems[j]);
      if (local[p] == -1 || local[t] == -1)
        throw PreconditionError("subset is not closed under both operations");
      add[i][j] = local[p];
      circ[i][j] = local[t];
    }
  return SubBrace{SkewBrace{FiniteGroup::trusted(std::move(add)),
                            FiniteGroup::trusted(std::move(circ))},
                  std::move(elems)};
}

bool BraceMorphism::is_bijective() const {
  if (domain_order != codomain_order) return false;
  std::vector<bool> seen(codomain_order, false);
  for (int v : map) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

BraceMorphism make_brace_morphism(const SkewBrace& dom, const SkewBrace& cod,
                                  std::vector<int> map) {
  if (static_cast<int>(map.size()) != dom.order())
    throw PreconditionError("morphism map has wrong domain size");
  for (int v : map)
    if (v < 0 || v >= cod.order())
      throw PreconditionError("morphism map value out of codomain range");
  for (int x = 0; x < dom.order(); ++x)
    for (int y = 0; y < dom.order(); ++y) {
      if (map[dom.plus(x, y)] != cod.plus(map[x], map[y]))
        throw PreconditionError("map does not preserve the additive operation");
      if (map[dom.times(x, y)] != cod.times(map[x], map[y]))
        throw PreconditionError("map does not preserve the multiplicative operation");
    }
  return BraceMorphism{dom.order(), cod.order(), std::move(map)};
}

bool is_brace_automorphism(const SkewBrace& a, const std::vector<int>& map) {
  const int n = a.order();
  if (static_cast<int>(map.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : map) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (map[a.plus(x, y)] != a.plus(map[x], map[y])) return false;
      if (map[a.times(x, y)] != a.times(map[x], map[y])) return false;
    }
  return true;
}

std::optional<BraceMorphism> find_brace_isomorphism(const SkewBrace& a,
                                                    const SkewBrace& b,
                                                    int order_cap) {
  if (a.order() > order_cap || b.order() > order_cap)
    throw CapacityError("brace isomorphism search is capped at order " +
                        std::to_string(order_cap));
  if (a.order() != b.order()) return std::nullopt;
  if (a.add.order_profile() != b.add.order_profile()) return std::nullopt;
  if (a.circ.order_profile() != b.circ.order_profile()) return std::nullopt;
  const int n = a.order();
  if (n == 1) return BraceMorphism{1, 1, {b.zero()}};

  std::vector<int> gens = minimal_generating_set(a.circ);

  // Spanning tree of the circ Cayley graph; a circ-preserving map is
  // determined by the generator images.
  std::vector<int> parent(n, -2), via(n, -1), visit;
  {
    std::vector<int> work;
    parent[a.zero()] = -1;
    visit.push_back(a.zero());
    work.push_back(a.zero());
    for (std::size_t head = 0; head < work.size(); ++head) {
      int x = work[head];
      for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
        int y = a.circ.op(x, gens[i]);
        if (parent[y] != -2) continue;
        parent[y] = x;
        via[y] = i;
        visit.push_back(y);
        work.push_back(y);
      }
    }
  }

  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int want_circ = a.circ.element_order(gens[i]);
    int want_add = a.add.element_order(gens[i]);
    for (int y = 0; y < n; ++y)
      if (b.circ.element_order(y) == want_circ &&
          b.add.element_order(y) == want_add)
        candidates[i].push_back(y);
  }

  std::vector<int> imgs(gens.size());
  std::vector<int> map(n);
  std::optional<BraceMorphism> found;
  auto try_tuple = [&]() -> bool {
    ElementSet img_gens(n);
    for (int v : imgs) img_gens.insert(v);
    if (subgroup_generated(b.circ, img_gens).size() != n) return false;
    map.assign(n, -1);
    map[a.zero()] = b.zero();
    for (int x : visit) {
      if (x == a.zero()) continue;
      map[x] = b.circ.op(map[parent[x]], imgs[via[x]]);
    }
    std::vector<bool> seen(n, false);
    for (int v : map) {
      if (seen[v]) return false;
      seen[v] = true;
    }
    for (int x = 0; x < n; ++x)
      for (int i = 0; i < static_cast<int>(gens.size()); ++i)
        if (map[a.circ.op(x, gens[i])] != b.circ.op(map[x], imgs[i]))
          return false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (map[a.plus(x, y)] != b.plus(map[x], map[y])) return false;
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (found) return;
    if (depth == gens.size()) {
      if (try_tuple()) found = BraceMorphism{n, n, map};
      return;
    }
    for (int cand : candidates[depth]) {
      imgs[depth] = cand;
      self(self, depth + 1);
      if (found) return;
    }
  };
  recurse(recurse, 0);
  return found;
}

RadicalRing to_radical_ring(const SkewBrace& a) {
  if (!a.add.is_abelian())
    throw PreconditionError("radical ring requires an abelian additive group");
  if (!is_two_sided(a))
    throw PreconditionError("radical ring requires a two-sided brace");
  const int n = a.order();
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) mult[x][y] = a.star(x, y);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (mult[mult[x][y]][z] != mult[x][mult[y][z]])
          throw ConsistencyError("ring multiplication is not associative");
        if (mult[a.plus(x, y)][z] != a.plus(mult[x][z], mult[y][z]) ||
            mult[x][a.plus(y, z)] != a.plus(mult[x][y], mult[x][z]))
          throw ConsistencyError("ring multiplication is not bi-additive");
      }
      if (a.times(x, y) != a.plus(a.plus(x, y), mult[x][y]))
        throw ConsistencyError("circle operation does not match a + b + a*b");
    }
  return RadicalRing{n, a.add, std::move(mult)};
}

}  // namespace braceforge
