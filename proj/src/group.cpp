#include "braceforge/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "braceforge/errors.hpp"

namespace braceforge {

namespace {

void check_table_shape(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InvalidArgumentError("group table must be non-empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw InvalidArgumentError("group table must be square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw InvalidArgumentError("group table entry out of range");
  }
}

int find_identity(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok) return e;
  }
  throw AxiomError("group table has no two-sided identity");
}

std::vector<int> find_inverses(const std::vector<std::vector<int>>& table, int e) {
  const int n = static_cast<int>(table.size());
  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (table[x][y] == e && table[y][x] == e) {
        inv[x] = y;
        break;
      }
    }
    if (inv[x] == -1)
      throw AxiomError("group element has no inverse", {x, -1, -1});
  }
  return inv;
}

FiniteGroup assemble(std::vector<std::vector<int>> table,
                     std::vector<std::string> labels) {
  check_table_shape(table);
  if (!labels.empty() && labels.size() != table.size())
    throw InvalidArgumentError("label list does not match group order");
  FiniteGroup g;
  g.order = static_cast<int>(table.size());
  g.identity = find_identity(table);
  g.inverses = find_inverses(table, g.identity);
  g.table = std::move(table);
  g.labels = std::move(labels);
  return g;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> labels) {
  FiniteGroup g = assemble(std::move(table), std::move(labels));
  g.check_axioms();
  return g;
}

FiniteGroup FiniteGroup::trusted(std::vector<std::vector<int>> table,
                                 std::vector<std::string> labels) {
  return assemble(std::move(table), std::move(labels));
}

void FiniteGroup::check_axioms() const {
  const int n = order;
  std::vector<bool> seen(n);
  for (int x = 0; x < n; ++x) {
    seen.assign(n, false);
    for (int y = 0; y < n; ++y) {
      if (seen[table[x][y]])
        throw AxiomError("group table row is not a permutation", {x, y, -1});
      seen[table[x][y]] = true;
    }
    seen.assign(n, false);
    for (int y = 0; y < n; ++y) {
      if (seen[table[y][x]])
        throw AxiomError("group table column is not a permutation", {y, x, -1});
      seen[table[y][x]] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw AxiomError("group table is not associative", {a, b, c});
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (table[a][b] != table[b][a]) return false;
  return true;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  int x = a;
  while (x != identity) {
    x = table[x][a];
    ++k;
  }
  return k;
}

std::vector<int> FiniteGroup::order_profile() const {
  std::vector<int> orders(order);
  for (int a = 0; a < order; ++a) orders[a] = element_order(a);
  std::sort(orders.begin(), orders.end());
  return orders;
}

bool GroupHom::is_bijective() const {
  if (domain_order != codomain_order) return false;
  std::vector<bool> seen(codomain_order, false);
  for (int v : map) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

GroupHom make_group_hom(const FiniteGroup& dom, const FiniteGroup& cod,
                        std::vector<int> map) {
  if (static_cast<int>(map.size()) != dom.order)
    throw PreconditionError("homomorphism map has wrong domain size");
  for (int v : map)
    if (v < 0 || v >= cod.order)
      throw PreconditionError("homomorphism map value out of codomain range");
  for (int x = 0; x < dom.order; ++x)
    for (int y = 0; y < dom.order; ++y)
      if (map[dom.op(x, y)] != cod.op(map[x], map[y]))
        throw PreconditionError("map is not a group homomorphism");
  return GroupHom{dom.order, cod.order, std::move(map)};
}

GroupHom inverse_hom(const GroupHom& h) {
  if (!h.is_bijective()) throw PreconditionError("homomorphism is not bijective");
  std::vector<int> inv(h.codomain_order);
  for (int x = 0; x < h.domain_order; ++x) inv[h.map[x]] = x;
  return GroupHom{h.codomain_order, h.domain_order, std::move(inv)};
}

GroupHom compose(const GroupHom& second, const GroupHom& first) {
  if (first.codomain_order != second.domain_order)
    throw PreconditionError("homomorphisms do not compose");
  std::vector<int> map(first.domain_order);
  for (int x = 0; x < first.domain_order; ++x) map[x] = second.map[first.map[x]];
  return GroupHom{first.domain_order, second.codomain_order, std::move(map)};
}

FiniteGroup make_cyclic(int n) {
  if (n < 1) throw InvalidArgumentError("cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

FiniteGroup make_dihedral(int two_n) {
  if (two_n < 2 || two_n % 2 != 0)
    throw InvalidArgumentError("dihedral group order must be even and >= 2");
  const int n = two_n / 2;
  auto enc = [n](int flip, int rot) { return flip * n + ((rot % n) + n) % n; };
  std::vector<std::vector<int>> table(two_n, std::vector<int>(two_n));
  std::vector<std::string> labels(two_n);
  for (int e1 = 0; e1 < 2; ++e1)
    for (int i = 0; i < n; ++i) {
      labels[enc(e1, i)] = (e1 ? "sr" : "r") + std::to_string(i);
      for (int e2 = 0; e2 < 2; ++e2)
        for (int j = 0; j < n; ++j)
          // (s^e1 r^i)(s^e2 r^j) = s^(e1^e2) r^(j - i) if e2 else s^e1 r^(i + j)
          table[enc(e1, i)][enc(e2, j)] =
              e2 ? enc(e1 ^ 1, j - i) : enc(e1, i + j);
    }
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

FiniteGroup make_presented_c5_c4() {
  // b^l a^m = a^(m * 3^l) b^l, since b a b^-1 = a^3.
  auto enc = [](int k, int l) { return 4 * ((k % 5 + 5) % 5) + ((l % 4 + 4) % 4); };
  int pow3[4] = {1, 3, 9 % 5, 27 % 5};
  std::vector<std::vector<int>> table(20, std::vector<int>(20));
  std::vector<std::string> labels(20);
  for (int k = 0; k < 5; ++k)
    for (int l = 0; l < 4; ++l) {
      labels[enc(k, l)] = "a" + std::to_string(k) + "b" + std::to_string(l);
      for (int m = 0; m < 5; ++m)
        for (int j = 0; j < 4; ++j)
          table[enc(k, l)][enc(m, j)] = enc(k + m * pow3[l], l + j);
    }
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int least_primitive_root(int p) {
  if (p == 2) return 1;
  for (int g = 2; g < p; ++g) {
    int x = g % p;
    int ord = 1;
    while (x != 1) {
      x = x * g % p;
      ++ord;
    }
    if (ord == p - 1) return g;
  }
  throw ConsistencyError("no primitive root found");
}

}  // namespace

FiniteGroup make_holomorph_cp(int p) {
  if (!is_prime(p)) throw InvalidArgumentError("holomorph builder requires a prime");
  const int m = p - 1;
  const int g0 = least_primitive_root(p);
  std::vector<int> gpow(m);
  gpow[0] = 1 % p;
  for (int u = 1; u < m; ++u) gpow[u] = gpow[u - 1] * g0 % p;
  auto enc = [m](int x, int u) { return x * m + u; };
  const int n = p * m;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x1 = 0; x1 < p; ++x1)
    for (int u1 = 0; u1 < m; ++u1) {
      labels[enc(x1, u1)] = "x" + std::to_string(x1) + "g" + std::to_string(u1);
      for (int x2 = 0; x2 < p; ++x2)
        for (int u2 = 0; u2 < m; ++u2)
          table[enc(x1, u1)][enc(x2, u2)] =
              enc((x1 + gpow[u1] * x2) % p, (u1 + u2) % m);
    }
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

FiniteGroup make_quaternion8() {
  static const int axmul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int s = 0; s < 2; ++s)
    for (int a = 0; a < 4; ++a)
      for (int t = 0; t < 2; ++t)
        for (int b = 0; b < 4; ++b) {
          int sign = (s + t + (sgn[a][b] < 0 ? 1 : 0)) % 2;
          table[s * 4 + a][t * 4 + b] = sign * 4 + axmul[a][b];
        }
  std::vector<std::string> labels = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

FiniteGroup make_alternating(int n) {
  if (n != 4 && n != 5)
    throw InvalidArgumentError("alternating builder supports n = 4 or 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;

  const int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  std::vector<int> comp(n);
  for (int i = 0; i < m; ++i) {
    std::string label;
    for (int x : perms[i]) label += static_cast<char>('0' + x);
    labels[i] = label;
    for (int j = 0; j < m; ++j) {
      for (int x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      table[i][j] = index.at(comp);
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

FiniteGroup product_group(const FiniteGroup& g, const FiniteGroup& h) {
  const int n = g.order * h.order;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i1 = 0; i1 < g.order; ++i1)
    for (int j1 = 0; j1 < h.order; ++j1)
      for (int i2 = 0; i2 < g.order; ++i2)
        for (int j2 = 0; j2 < h.order; ++j2)
          table[i1 * h.order + j1][i2 * h.order + j2] =
              g.op(i1, i2) * h.order + h.op(j1, j2);
  return FiniteGroup::trusted(std::move(table));
}

FiniteGroup opposite_group(const FiniteGroup& g) {
  std::vector<std::vector<int>> table(g.order, std::vector<int>(g.order));
  for (int i = 0; i < g.order; ++i)
    for (int j = 0; j < g.order; ++j) table[i][j] = g.table[j][i];
  return FiniteGroup::trusted(std::move(table), g.labels);
}

ElementSet subgroup_generated(const FiniteGroup& g, const ElementSet& s) {
  if (s.carrier_order() != g.order)
    throw PreconditionError("generating set lives on a different carrier");
  ElementSet closure = ElementSet::singleton(g.order, g.identity);
  std::vector<int> members = {g.identity};
  std::deque<int> work;
  for (int x : s.indices())
    if (!closure.contains(x)) {
      closure.insert(x);
      members.push_back(x);
      work.push_back(x);
    }
  while (!work.empty()) {
    int x = work.front();
    work.pop_front();
    for (std::size_t i = 0; i < members.size(); ++i) {
      int y = members[i];
      for (int z : {g.op(x, y), g.op(y, x)}) {
        if (!closure.contains(z)) {
          closure.insert(z);
          members.push_back(z);
          work.push_back(z);
        }
      }
    }
  }
  return closure;
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.carrier_order() != g.order) return false;
  if (!s.contains(g.identity)) return false;
  auto xs = s.indices();
  for (int x : xs)
    for (int y : xs)
      if (!s.contains(g.op(x, y))) return false;
  return true;
}

bool is_conjugation_stable(const FiniteGroup& g, const ElementSet& s) {
  auto xs = s.indices();
  for (int a = 0; a < g.order; ++a)
    for (int x : xs)
      if (!s.contains(g.op(g.op(a, x), g.inv(a)))) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s))
    throw PreconditionError("normality test requires a subgroup");
  return is_conjugation_stable(g, s);
}

std::vector<ElementSet> conjugacy_classes(const FiniteGroup& g) {
  std::vector<ElementSet> classes;
  std::vector<bool> seen(g.order, false);
  for (int x = 0; x < g.order; ++x) {
    if (seen[x]) continue;
    ElementSet cls(g.order);
    for (int a = 0; a < g.order; ++a) {
      int y = g.op(g.op(a, x), g.inv(a));
      cls.insert(y);
      seen[y] = true;
    }
    classes.push_back(cls);
  }
  return classes;
}

std::vector<ElementSet> normal_subgroups(const FiniteGroup& g) {
  auto classes = conjugacy_classes(g);
  std::set<ElementSet> found;
  std::deque<ElementSet> work;
  ElementSet triv = ElementSet::singleton(g.order, g.identity);
  found.insert(triv);
  work.push_back(triv);
  while (!work.empty()) {
    ElementSet n = work.front();
    work.pop_front();
    for (const auto& cls : classes) {
      if (cls.subset_of(n)) continue;
      ElementSet k = subgroup_generated(g, n.unite(cls));
      if (found.insert(k).second) work.push_back(k);
    }
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), ElementSetSizeLexLess{});
  return out;
}

std::vector<ElementSet> all_subgroups(const FiniteGroup& g, int order_cap) {
  if (g.order > order_cap)
    throw CapacityError("subgroup enumeration is capped at order " +
                        std::to_string(order_cap));
  std::set<ElementSet> found;
  std::deque<ElementSet> work;
  ElementSet triv = ElementSet::singleton(g.order, g.identity);
  found.insert(triv);
  work.push_back(triv);
  while (!work.empty()) {
    ElementSet h = work.front();
    work.pop_front();
    for (int x = 0; x < g.order; ++x) {
      if (h.contains(x)) continue;
      ElementSet ext = h;
      ext.insert(x);
      ElementSet k = subgroup_generated(g, ext);
      if (found.insert(k).second) work.push_back(k);
    }
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), ElementSetSizeLexLess{});
  return out;
}

ElementSet center(const FiniteGroup& g) {
  ElementSet z(g.order);
  for (int x = 0; x < g.order; ++x) {
    bool central = true;
    for (int a = 0; a < g.order && central; ++a)
      central = g.op(x, a) == g.op(a, x);
    if (central) z.insert(x);
  }
  return z;
}

ElementSet commutator_of(const FiniteGroup& g, const ElementSet& xs,
                         const ElementSet& ys) {
  ElementSet gens(g.order);
  for (int x : xs.indices())
    for (int y : ys.indices())
      gens.insert(g.op(g.op(g.inv(x), g.inv(y)), g.op(x, y)));
  return subgroup_generated(g, gens);
}

ElementSet commutator_subgroup(const FiniteGroup& g) {
  ElementSet full = ElementSet::full(g.order);
  return commutator_of(g, full, full);
}

GroupWithProjection quotient_group(const FiniteGroup& g, const ElementSet& n) {
  if (!is_subgroup(g, n) || !is_conjugation_stable(g, n))
    throw PreconditionError("quotient requires a normal subgroup");
  std::vector<int> rep(g.order);
  for (int x = 0; x < g.order; ++x) {
    int r = x;
    for (int y : n.indices()) r = std::min(r, g.op(x, y));
    rep[x] = r;
  }
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<int> class_of(g.order, -1);
  for (int i = 0; i < static_cast<int>(reps.size()); ++i) class_of[reps[i]] = i;

  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i][j] = class_of[rep[g.op(reps[i], reps[j])]];
  FiniteGroup q = FiniteGroup::trusted(std::move(table));

  std::vector<int> proj(g.order);
  for (int x = 0; x < g.order; ++x) proj[x] = class_of[rep[x]];
  GroupHom hom = make_group_hom(g, q, std::move(proj));
  return GroupWithProjection{std::move(q), std::move(hom)};
}

GroupWithProjection abelianization(const FiniteGroup& g) {
  return quotient_group(g, commutator_subgroup(g));
}

std::optional<int> derived_length(const FiniteGroup& g) {
  ElementSet cur = ElementSet::full(g.order);
  ElementSet triv = ElementSet::singleton(g.order, g.identity);
  int steps = 0;
  while (cur != triv) {
    ElementSet next = commutator_of(g, cur, cur);
    if (next == cur) return std::nullopt;
    cur = next;
    ++steps;
  }
  return steps;
}

std::vector<ElementSet> lower_central_series(const FiniteGroup& g) {
  std::vector<ElementSet> terms = {ElementSet::full(g.order)};
  ElementSet full = ElementSet::full(g.order);
  while (true) {
    ElementSet next = commutator_of(g, terms.back(), full);
    if (next == terms.back()) break;
    terms.push_back(next);
  }
  return terms;
}

std::optional<int> nilpotency_class(const FiniteGroup& g) {
  auto terms = lower_central_series(g);
  ElementSet triv = ElementSet::singleton(g.order, g.identity);
  if (terms.back() != triv) return std::nullopt;
  return static_cast<int>(terms.size()) - 1;
}

std::vector<int> minimal_generating_set(const FiniteGroup& g) {
  if (g.order == 1) return {};
  for (int x = 0; x < g.order; ++x)
    if (subgroup_generated(g, ElementSet::singleton(g.order, x)).size() == g.order)
      return {x};
  for (int x = 0; x < g.order; ++x)
    for (int y = x + 1; y < g.order; ++y)
      if (subgroup_generated(g, ElementSet::of(g.order, {x, y})).size() == g.order)
        return {x, y};
  // Greedy: extend by the element that grows the generated subgroup most.
  std::vector<int> gens;
  ElementSet span = ElementSet::singleton(g.order, g.identity);
  while (span.size() < g.order) {
    int best = -1, best_size = -1;
    for (int x = 0; x < g.order; ++x) {
      if (span.contains(x)) continue;
      ElementSet ext = span;
      ext.insert(x);
      int sz = subgroup_generated(g, ext).size();
      if (sz > best_size) {
        best = x;
        best_size = sz;
      }
    }
    gens.push_back(best);
    span.insert(best);
    span = subgroup_generated(g, span);
  }
  return gens;
}

namespace {

// Spanning tree of the Cayley graph on the generators, in BFS order.
struct CayleyTree {
  std::vector<int> visit_order;           // identity first
  std::vector<int> parent;                // -1 for identity
  std::vector<int> via;                   // generator index used from parent
};

CayleyTree build_tree(const FiniteGroup& g, const std::vector<int>& gens) {
  CayleyTree t;
  t.parent.assign(g.order, -2);
  t.via.assign(g.order, -1);
  std::deque<int> work;
  t.parent[g.identity] = -1;
  t.visit_order.push_back(g.identity);
  work.push_back(g.identity);
  while (!work.empty()) {
    int x = work.front();
    work.pop_front();
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
      int y = g.op(x, gens[i]);
      if (t.parent[y] != -2) continue;
      t.parent[y] = x;
      t.via[y] = i;
      t.visit_order.push_back(y);
      work.push_back(y);
    }
  }
  if (static_cast<int>(t.visit_order.size()) != g.order)
    throw ConsistencyError("generating set does not span the group");
  return t;
}

// Builds the map determined by generator images along the tree, then checks
// map[x*gen] == map[x]*img on all x and generators; with bijectivity this
// certifies a full isomorphism.
bool check_images(const FiniteGroup& g, const FiniteGroup& h,
                  const std::vector<int>& gens, const CayleyTree& tree,
                  const std::vector<int>& imgs, std::vector<int>& map_out) {
  ElementSet img_gens(h.order);
  for (int v : imgs) img_gens.insert(v);
  if (subgroup_generated(h, img_gens).size() != h.order) return false;

  map_out.assign(g.order, -1);
  map_out[g.identity] = h.identity;
  for (int x : tree.visit_order) {
    if (x == g.identity) continue;
    map_out[x] = h.op(map_out[tree.parent[x]], imgs[tree.via[x]]);
  }
  std::vector<bool> seen(h.order, false);
  for (int v : map_out) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  for (int x = 0; x < g.order; ++x)
    for (int i = 0; i < static_cast<int>(gens.size()); ++i)
      if (map_out[g.op(x, gens[i])] != h.op(map_out[x], imgs[i])) return false;
  return true;
}

// Enumerates isomorphisms g -> h; calls sink(map); stops when sink
// returns false.
template <class Sink>
void for_each_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                          int order_cap, Sink&& sink) {
  if (g.order > order_cap || h.order > order_cap)
    throw CapacityError("isomorphism search is capped at order " +
                        std::to_string(order_cap));
  if (g.order != h.order) return;
  if (g.order_profile() != h.order_profile()) return;
  if (g.order == 1) {
    std::vector<int> ident{h.identity};
    sink(ident);
    return;
  }
  std::vector<int> gens = minimal_generating_set(g);
  CayleyTree tree = build_tree(g, gens);

  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int want = g.element_order(gens[i]);
    for (int y = 0; y < h.order; ++y)
      if (h.element_order(y) == want) candidates[i].push_back(y);
  }

  std::vector<int> imgs(gens.size());
  std::vector<int> map;
  bool stop = false;
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (stop) return;
    if (depth == gens.size()) {
      if (check_images(g, h, gens, tree, imgs, map))
        if (!sink(map)) stop = true;
      return;
    }
    for (int cand : candidates[depth]) {
      imgs[depth] = cand;
      self(self, depth + 1);
      if (stop) return;
    }
  };
  recurse(recurse, 0);
}

}  // namespace

std::optional<GroupHom> find_isomorphism(const FiniteGroup& g,
                                         const FiniteGroup& h, int order_cap) {
  std::optional<GroupHom> found;
  for_each_isomorphism(g, h, order_cap, [&](const std::vector<int>& map) {
    found = GroupHom{g.order, h.order, map};
    return false;
  });
  return found;
}

std::vector<GroupHom> all_isomorphisms(const FiniteGroup& g,
                                       const FiniteGroup& h, int order_cap) {
  std::vector<GroupHom> out;
  for_each_isomorphism(g, h, order_cap, [&](const std::vector<int>& map) {
    out.push_back(GroupHom{g.order, h.order, map});
    return true;
  });
  return out;
}

std::vector<GroupHom> automorphisms(const FiniteGroup& g, int order_cap) {
  return all_isomorphisms(g, g, order_cap);
}

std::vector<ElementSet> characteristic_subgroups(const FiniteGroup& g,
                                                 int order_cap) {
  auto subs = all_subgroups(g, order_cap);
  auto autos = automorphisms(g, order_cap);
  std::vector<ElementSet> out;
  for (const auto& s : subs) {
    bool fixed = true;
    for (const auto& phi : autos) {
      ElementSet image(g.order);
      for (int x : s.indices()) image.insert(phi(x));
      if (image != s) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.push_back(s);
  }
  return out;
}

std::vector<int> induced_on_abelianization(const FiniteGroup& dom,
                                           const GroupWithProjection& ab_dom,
                                           const FiniteGroup& cod,
                                           const GroupWithProjection& ab_cod,
                                           const GroupHom& phi) {
  (void)cod;
  std::vector<int> out(ab_dom.group.order, -1);
  for (int x = 0; x < dom.order; ++x) {
    int src = ab_dom.projection(x);
    int dst = ab_cod.projection(phi(x));
    if (out[src] == -1)
      out[src] = dst;
    else if (out[src] != dst)
      throw ConsistencyError("isomorphism does not descend to abelianizations");
  }
  return out;
}

}  // namespace braceforge
