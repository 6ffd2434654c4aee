#include "braceforge/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "braceforge/errors.hpp"

namespace braceforge {

namespace {

ElementSet zero_set(const SkewBrace& a) {
  return ElementSet::singleton(a.order(), a.zero());
}

}  // namespace

Triple make_triple(const FiniteGroup& g, const FiniteGroup& h,
                   const std::vector<int>& theta_on_ab) {
  GroupWithProjection ab_g = abelianization(g);
  GroupWithProjection ab_h = abelianization(h);
  GroupHom theta = make_group_hom(ab_g.group, ab_h.group, theta_on_ab);
  if (!theta.is_bijective())
    throw InvalidArgumentError("triple requires an isomorphism of abelianizations");
  return Triple{g,
                h,
                std::move(ab_g.group),
                std::move(ab_h.group),
                std::move(ab_g.projection),
                std::move(ab_h.projection),
                std::move(theta)};
}

Triple make_triple_id(const FiniteGroup& g, const FiniteGroup& h) {
  GroupWithProjection ab_g = abelianization(g);
  GroupWithProjection ab_h = abelianization(h);
  if (ab_g.group.table != ab_h.group.table)
    throw InvalidArgumentError(
        "identity theta requires equal abelianization tables");
  std::vector<int> id(ab_g.group.order);
  for (int i = 0; i < ab_g.group.order; ++i) id[i] = i;
  return make_triple(g, h, id);
}

std::string series_kind_name(SeriesKind k) {
  switch (k) {
    case SeriesKind::left: return "left";
    case SeriesKind::right: return "right";
    case SeriesKind::strong: return "strong";
    case SeriesKind::derived: return "derived";
  }
  return "?";
}

SeriesReport series(const SkewBrace& a, SeriesKind kind) {
  const ElementSet full = ElementSet::full(a.order());
  const ElementSet zero = zero_set(a);
  SeriesReport rep;
  rep.kind = kind;

  if (kind != SeriesKind::strong) {
    std::vector<ElementSet> terms = {full};
    while (terms.back() != zero) {
      const ElementSet& last = terms.back();
      ElementSet next = kind == SeriesKind::right ? star_subgroup(a, last, full)
                        : kind == SeriesKind::left ? star_subgroup(a, full, last)
                                                   : star_subgroup(a, last, last);
      if (next == last) break;
      terms.push_back(next);
    }
    rep.terms = std::move(terms);
  } else {
    // History-dependent recursion: the (m+1)-th term is generated by all
    // T[i] * T[m+1-i]. Once a value repeats from index k through index 2k the
    // generating families stop changing, so the series is constant beyond.
    std::vector<ElementSet> hist = {full};
    std::size_t plateau_start = 0;  // 1-based index of first repeat; 0 = none
    while (hist.back() != zero) {
      const std::size_t m = hist.size();
      ElementSet next = zero;
      for (std::size_t i = 0; i < m; ++i) {
        ElementSet part = star_subgroup(a, hist[i], hist[m - 1 - i]);
        next = subgroup_generated(a.add, next.unite(part));
      }
      if (next == hist.back()) {
        if (plateau_start == 0) plateau_start = m;
        hist.push_back(next);
        if (hist.size() >= 2 * plateau_start) break;
      } else {
        plateau_start = 0;
        hist.push_back(next);
      }
    }
    rep.terms.push_back(hist.front());
    for (std::size_t i = 1; i < hist.size(); ++i)
      if (hist[i] != rep.terms.back()) rep.terms.push_back(hist[i]);
  }

  rep.stabilized = true;
  rep.reaches_zero = rep.terms.back() == zero;
  rep.length = static_cast<int>(rep.terms.size()) - 1;
  return rep;
}

bool is_left_nilpotent(const SkewBrace& a) {
  return series(a, SeriesKind::left).reaches_zero;
}
bool is_right_nilpotent(const SkewBrace& a) {
  return series(a, SeriesKind::right).reaches_zero;
}
bool is_strongly_nilpotent(const SkewBrace& a) {
  return series(a, SeriesKind::strong).reaches_zero;
}
bool is_soluble(const SkewBrace& a) {
  return series(a, SeriesKind::derived).reaches_zero;
}

bool is_weakly_trivial(const SkewBrace& a) {
  return a_squared(a).intersect(a_op_squared(a)) == zero_set(a);
}

BraceWithProjection weakly_trivial_quotient(const SkewBrace& a) {
  ElementSet k = a_squared(a).intersect(a_op_squared(a));
  BraceWithProjection q = quotient_brace(a, k);
  if (!is_weakly_trivial(q.brace))
    throw ConsistencyError("quotient by A^2 n A^2_op is not weakly trivial");
  return q;
}

SubdirectEmbedding subdirect_embedding(const SkewBrace& a) {
  if (!is_weakly_trivial(a))
    throw PreconditionError("subdirect embedding requires a weakly trivial brace");
  BraceWithProjection q1 = quotient_brace(a, a_squared(a));
  BraceWithProjection q2 = quotient_brace(a, a_op_squared(a));
  SkewBrace prod = direct_product(q1.brace, q2.brace);
  const int n2 = q2.brace.order();
  std::vector<int> map(a.order());
  for (int x = 0; x < a.order(); ++x)
    map[x] = q1.projection(x) * n2 + q2.projection(x);
  BraceMorphism emb = make_brace_morphism(a, prod, std::move(map));

  std::set<int> image(emb.map.begin(), emb.map.end());
  if (static_cast<int>(image.size()) != a.order())
    throw ConsistencyError("subdirect embedding is not injective");
  std::set<int> first, second;
  for (int v : emb.map) {
    first.insert(v / n2);
    second.insert(v % n2);
  }
  if (static_cast<int>(first.size()) != q1.brace.order() ||
      static_cast<int>(second.size()) != q2.brace.order())
    throw ConsistencyError("subdirect embedding does not project onto the factors");

  return SubdirectEmbedding{std::move(q1), std::move(q2), std::move(prod),
                            std::move(emb)};
}

Pullback pullback(const SkewBrace& a, const SkewBrace& b, const SkewBrace& c,
                  const BraceMorphism& f, const BraceMorphism& g) {
  if (f.domain_order != a.order() || g.domain_order != b.order() ||
      f.codomain_order != c.order() || g.codomain_order != c.order())
    throw PreconditionError("pullback maps do not match the given braces");
  SkewBrace prod = direct_product(a, b);
  ElementSet members(prod.order());
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < b.order(); ++y)
      if (f(x) == g(y)) members.insert(x * b.order() + y);
  SubBrace sub = restrict_to(prod, members);

  const int m = sub.brace.order();
  std::vector<int> pa(m), pb(m);
  for (int i = 0; i < m; ++i) {
    pa[i] = sub.elements[i] / b.order();
    pb[i] = sub.elements[i] % b.order();
  }
  BraceMorphism to_a = make_brace_morphism(sub.brace, a, std::move(pa));
  BraceMorphism to_b = make_brace_morphism(sub.brace, b, std::move(pb));
  return Pullback{std::move(sub.brace), std::move(sub.elements), std::move(to_a),
                  std::move(to_b)};
}

GoursatDatum goursat_decompose(const SkewBrace& a, const SkewBrace& b,
                               const ElementSet& c_sub) {
  const int nb = b.order();
  if (c_sub.carrier_order() != a.order() * nb)
    throw PreconditionError("subset does not index pairs of the two braces");
  auto pairs = c_sub.indices();
  if (!c_sub.contains(a.zero() * nb + b.zero()))
    throw PreconditionError("subdirect product must contain the identity pair");
  ElementSet first(a.order()), second(nb);
  for (int p : pairs) {
    first.insert(p / nb);
    second.insert(p % nb);
  }
  if (first.size() != a.order() || second.size() != nb)
    throw PreconditionError("subset does not project onto both factors");
  for (int p : pairs)
    for (int q : pairs) {
      int sum = a.plus(p / nb, q / nb) * nb + b.plus(p % nb, q % nb);
      int prod = a.times(p / nb, q / nb) * nb + b.times(p % nb, q % nb);
      if (!c_sub.contains(sum) || !c_sub.contains(prod))
        throw PreconditionError("subset is not a sub skew brace of the product");
    }

  ElementSet i(a.order()), j(nb);
  for (int x = 0; x < a.order(); ++x)
    if (c_sub.contains(x * nb + b.zero())) i.insert(x);
  for (int y = 0; y < nb; ++y)
    if (c_sub.contains(a.zero() * nb + y)) j.insert(y);

  BraceWithProjection qa = quotient_brace(a, i);
  BraceWithProjection qb = quotient_brace(b, j);
  std::vector<int> rho(qa.brace.order(), -1);
  for (int p : pairs) {
    int src = qa.projection(p / nb);
    int dst = qb.projection(p % nb);
    if (rho[src] == -1)
      rho[src] = dst;
    else if (rho[src] != dst)
      throw ConsistencyError("graph map of subdirect product is not well-defined");
  }
  BraceMorphism rho_m = make_brace_morphism(qa.brace, qb.brace, std::move(rho));
  if (!rho_m.is_bijective())
    throw ConsistencyError("graph map of subdirect product is not bijective");
  return GoursatDatum{std::move(i), std::move(j), std::move(qa), std::move(qb),
                      std::move(rho_m)};
}

ElementSet goursat_subset(const SkewBrace& a, const SkewBrace& b,
                          const GoursatDatum& d) {
  ElementSet out(a.order() * b.order());
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < b.order(); ++y)
      if (d.rho(d.a_quot.projection(x)) == d.b_quot.projection(y))
        out.insert(x * b.order() + y);
  return out;
}

TripleBrace triple_to_brace(const Triple& t) {
  SkewBrace tg = trivial_brace(t.g);
  SkewBrace oh = almost_trivial(t.h);
  SkewBrace common = trivial_brace(t.ab_h);

  std::vector<int> fmap(t.g.order);
  for (int x = 0; x < t.g.order; ++x) fmap[x] = t.theta(t.g_proj(x));
  BraceMorphism f = make_brace_morphism(tg, common, std::move(fmap));

  std::vector<int> gmap(t.h.order);
  for (int y = 0; y < t.h.order; ++y) gmap[y] = t.h_proj(y);
  BraceMorphism g = make_brace_morphism(oh, common, std::move(gmap));

  Pullback pb = pullback(tg, oh, common, f, g);
  if (!is_weakly_trivial(pb.brace))
    throw ConsistencyError("triple pullback is not weakly trivial");
  return TripleBrace{std::move(pb.brace), std::move(tg), std::move(oh),
                     std::move(pb.to_a), std::move(pb.to_b)};
}

Triple brace_to_triple(const SkewBrace& a) {
  if (!is_weakly_trivial(a))
    throw PreconditionError("triple classification requires a weakly trivial brace");
  BraceWithProjection q1 = quotient_brace(a, a_squared(a));
  BraceWithProjection q2 = quotient_brace(a, a_op_squared(a));
  const FiniteGroup& g = q1.brace.circ;
  const FiniteGroup& h = q2.brace.circ;
  GroupWithProjection ab_g = abelianization(g);
  GroupWithProjection ab_h = abelianization(h);

  std::vector<int> m1(a.order()), m2(a.order());
  for (int x = 0; x < a.order(); ++x) {
    m1[x] = ab_g.projection(q1.projection(x));
    m2[x] = ab_h.projection(q2.projection(x));
  }
  std::vector<int> theta(ab_g.group.order, -1);
  for (int x = 0; x < a.order(); ++x) {
    if (theta[m1[x]] == -1)
      theta[m1[x]] = m2[x];
    else if (theta[m1[x]] != m2[x])
      throw ConsistencyError("canonical theta is not well-defined");
  }
  for (int v : theta)
    if (v == -1) throw ConsistencyError("canonical theta is not total");
  Triple t = make_triple(g, h, theta);
  return t;
}

bool triples_equivalent(const Triple& t1, const Triple& t2, int order_cap) {
  if (t1.g.order != t2.g.order || t1.h.order != t2.h.order) return false;
  if (t1.ab_g.order != t2.ab_g.order || t1.ab_h.order != t2.ab_h.order)
    return false;

  GroupWithProjection ab_g1{t1.ab_g, t1.g_proj};
  GroupWithProjection ab_g2{t2.ab_g, t2.g_proj};
  GroupWithProjection ab_h1{t1.ab_h, t1.h_proj};
  GroupWithProjection ab_h2{t2.ab_h, t2.h_proj};

  std::set<std::vector<int>> induced_h;
  for (const GroupHom& phi : all_isomorphisms(t1.h, t2.h, order_cap))
    induced_h.insert(
        induced_on_abelianization(t1.h, ab_h1, t2.h, ab_h2, phi));
  if (induced_h.empty()) return false;

  GroupHom theta1_inv = inverse_hom(t1.theta);
  for (const GroupHom& phi : all_isomorphisms(t1.g, t2.g, order_cap)) {
    std::vector<int> phi_bar =
        induced_on_abelianization(t1.g, ab_g1, t2.g, ab_g2, phi);
    // required phi_h_bar = theta2 . phi_g_bar . theta1^-1
    std::vector<int> required(t1.ab_h.order);
    for (int x = 0; x < t1.ab_h.order; ++x)
      required[x] = t2.theta(phi_bar[theta1_inv(x)]);
    if (induced_h.count(required)) return true;
  }
  return false;
}

std::string simple_two_sided_class_name(SimpleTwoSidedClass c) {
  switch (c) {
    case SimpleTwoSidedClass::trivial_of_simple: return "trivial-of-simple";
    case SimpleTwoSidedClass::almost_trivial_of_simple:
      return "almost-trivial-of-simple";
    case SimpleTwoSidedClass::two_sided_brace: return "two-sided-brace";
  }
  return "?";
}

SimpleTwoSidedClass classify_simple_two_sided(const SkewBrace& a) {
  if (!is_simple(a))
    throw PreconditionError("classification requires a simple brace");
  if (!is_two_sided(a))
    throw PreconditionError("classification requires a two-sided brace");
  ElementSet zero = zero_set(a);
  ElementSet sq = a_squared(a);
  ElementSet op_sq = a_op_squared(a);
  if (sq == zero) return SimpleTwoSidedClass::trivial_of_simple;
  if (op_sq == zero) return SimpleTwoSidedClass::almost_trivial_of_simple;
  ElementSet full = ElementSet::full(a.order());
  if (sq != full || op_sq != full || !a.add.is_abelian())
    throw ConsistencyError("simple two-sided brace escapes the classification");
  return SimpleTwoSidedClass::two_sided_brace;
}

std::vector<ElementSet> sub_skew_braces(const SkewBrace& a, int order_cap) {
  std::vector<ElementSet> out;
  for (const auto& s : all_subgroups(a.add, order_cap)) {
    bool closed = true;
    auto xs = s.indices();
    for (int x : xs) {
      for (int y : xs)
        if (!s.contains(a.times(x, y))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(s);
  }
  return out;
}

}  // namespace braceforge
