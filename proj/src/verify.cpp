#include "braceforge/verify.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "braceforge/errors.hpp"
#include "braceforge/primeness.hpp"
#include "braceforge/structure.hpp"
#include "braceforge/ybe.hpp"

namespace braceforge {

namespace {

using Braces = std::vector<NamedBrace>;
using Results = std::vector<SuiteResult>;

constexpr int kCharacteristicCap = 20;   // automorphism sweep cap
constexpr int kSubgroupSweepCap = 24;    // all-subgroup based suites
constexpr int kBruteForceCap = 32;       // closure-vs-oracle comparison
constexpr int kProductSquareCap = 64;    // ambient order for product sweeps

SuiteResult pass(const std::string& s) { return {s, "pass", ""}; }
SuiteResult fail(const std::string& s, const std::string& d) { return {s, "fail", d}; }
SuiteResult skip(const std::string& s, const std::string& d) { return {s, "skip", d}; }

ElementSet zset(const SkewBrace& a) {
  return ElementSet::singleton(a.order(), a.zero());
}

std::string set_str(const ElementSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int x : s.indices()) {
    if (!first) os << ",";
    os << x;
    first = false;
  }
  os << "}";
  return os.str();
}

// Group on a subgroup subset, elements relabeled in ascending order.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const ElementSet& s) {
  auto elems = s.indices();
  const int m = static_cast<int>(elems.size());
  std::vector<int> local(g.order, -1);
  for (int i = 0; i < m; ++i) local[elems[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i][j] = local[g.op(elems[i], elems[j])];
  return FiniteGroup::trusted(std::move(table));
}

// Wraps a per-brace check; exceptions become failures.
template <class Fn>
Results sweep(const Braces& bs, Fn&& per) {
  Results out;
  for (const auto& nb : bs) {
    try {
      out.push_back(per(nb));
    } catch (const Error& e) {
      out.push_back(fail(nb.name, std::string("error: ") + e.what()));
    }
  }
  return out;
}

bool is_trivial_shape(const SkewBrace& a) { return a.add.table == a.circ.table; }

bool is_almost_trivial_shape(const SkewBrace& a) {
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j)
      if (a.add.table[i][j] != a.circ.table[j][i]) return false;
  return true;
}

// --- brace_core -------------------------------------------------------------

Results suite_distributivity(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    const int n = a.order();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int lhs1 = a.star(x, a.plus(y, z));
          int rhs1 = a.plus(a.plus(a.plus(a.star(x, y), y), a.star(x, z)), a.neg(y));
          if (lhs1 != rhs1) return fail(nb.name, "a*(b+c) form fails");
          int lhs2 = a.star(a.times(x, y), z);
          int yz = a.star(y, z);
          int rhs2 = a.plus(a.plus(a.star(x, yz), yz), a.star(x, z));
          if (lhs2 != rhs2) return fail(nb.name, "(a o b)*c form fails");
        }
    if (is_two_sided(a)) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            int lhs3 = a.star(a.plus(x, y), z);
            int rhs3 = a.plus(a.plus(a.plus(a.neg(y), a.star(x, z)), y),
                              a.star(y, z));
            if (lhs3 != rhs3) return fail(nb.name, "(a+b)*c form fails");
            // a*(b o c) = a*c + a*b + (a*b)*c, from expanding
            // (a + a*b + b) o c with the right brace equation
            int lhs4 = a.star(x, a.times(y, z));
            int rhs4 = a.plus(a.plus(a.star(x, z), a.star(x, y)),
                              a.star(a.star(x, y), z));
            if (lhs4 != rhs4) return fail(nb.name, "a*(b o c) form fails");
          }
    }
    return pass(nb.name);
  });
}

Results suite_lambda_homomorphism(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    const int n = a.order();
    std::vector<bool> seen(n);
    for (int x = 0; x < n; ++x) {
      seen.assign(n, false);
      for (int y = 0; y < n; ++y) {
        int v = a.lambda(x, y);
        if (seen[v]) return fail(nb.name, "lambda_a is not a permutation");
        seen[v] = true;
      }
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (a.lambda(x, a.plus(y, z)) != a.plus(a.lambda(x, y), a.lambda(x, z)))
            return fail(nb.name, "lambda_a is not additive");
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (a.lambda(a.times(x, y), z) != a.lambda(x, a.lambda(y, z)))
            return fail(nb.name, "lambda is not multiplicative");
    return pass(nb.name);
  });
}

Results suite_inner_automorphisms(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    bool direct = is_two_sided(nb.brace);
    bool via_inner = is_two_sided_via_inner(nb.brace);
    if (direct != via_inner)
      return fail(nb.name, "two-sidedness tests disagree");
    return pass(nb.name);
  });
}

Results suite_opposite_involution(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    SkewBrace opp = opposite(a);
    SkewBrace back = opposite(opp);
    if (back.add.table != a.add.table || back.circ.table != a.circ.table)
      return fail(nb.name, "opposite is not an involution");
    if (all_ideals(a) != all_ideals(opp))
      return fail(nb.name, "ideals of A and A_op differ");
    return pass(nb.name);
  });
}

Results suite_star_op_opposite(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    SkewBrace opp = opposite(a);
    for (int x = 0; x < a.order(); ++x)
      for (int y = 0; y < a.order(); ++y) {
        if (a.star_op(x, y) != opp.star(x, y))
          return fail(nb.name, "star_op does not match the opposite brace");
        if (a.lambda_op(x, y) != a.plus(a.plus(x, a.lambda(x, y)), a.neg(x)))
          return fail(nb.name, "lambda_op identity fails");
      }
    return pass(nb.name);
  });
}

Results suite_characteristic_ideal(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (a.order() > kCharacteristicCap)
      return skip(nb.name, "out of hypothesis: order above automorphism sweep cap");
    if (!is_two_sided(a)) return skip(nb.name, "out of hypothesis");
    for (const auto& s : characteristic_subgroups(a.add)) {
      if (!ideal_witness(a, s).is_ideal())
        return fail(nb.name, "characteristic subgroup " + set_str(s) +
                                 " is not an ideal");
    }
    return pass(nb.name);
  });
}

// --- ideals -----------------------------------------------------------------

Results suite_a_squared_ideal(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    ElementSet sq = a_squared(a);
    a_op_squared(a);
    BraceWithProjection q = quotient_brace(a, sq);
    if (q.brace.add.table != q.brace.circ.table)
      return fail(nb.name, "A/A^2 is not a trivial brace");
    for (const auto& i : all_ideals(a)) {
      BraceWithProjection qi = quotient_brace(a, i);
      bool trivial_quot = qi.brace.add.table == qi.brace.circ.table;
      if (trivial_quot && !sq.subset_of(i))
        return fail(nb.name, "A^2 is not minimal among trivializing ideals");
    }
    return pass(nb.name);
  });
}

Results suite_centralize(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_two_sided(a)) return skip(nb.name, "out of hypothesis");
    ElementSet sq = a_squared(a);
    ElementSet op_sq = a_op_squared(a);
    for (int x : sq.indices())
      for (int y : op_sq.indices())
        if (a.plus(x, y) != a.plus(y, x))
          return fail(nb.name, "A^2 and A^2_op do not centralize each other");
    return pass(nb.name);
  });
}

Results suite_central_intersection(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_two_sided(a)) return skip(nb.name, "out of hypothesis");
    ElementSet inter = a_squared(a).intersect(a_op_squared(a));
    ElementSet sum = subgroup_sum(a, a_squared(a), a_op_squared(a));
    for (int x : inter.indices())
      for (int s : sum.indices())
        if (a.plus(x, s) != a.plus(s, x))
          return fail(nb.name,
                      "A^2 n A^2_op is not central in (A^2 + A^2_op, +)");
    return pass(nb.name);
  });
}

Results suite_extension_weakly_trivial(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_two_sided(a)) return skip(nb.name, "out of hypothesis");
    BraceWithProjection q = weakly_trivial_quotient(a);
    if (!is_weakly_trivial(q.brace))
      return fail(nb.name, "quotient is not weakly trivial");
    ElementSet k = a_squared(a).intersect(a_op_squared(a));
    SubBrace kernel = restrict_to(a, k);
    if (!kernel.brace.add.is_abelian())
      return fail(nb.name, "kernel is not of abelian type");
    if (!is_two_sided(kernel.brace))
      return fail(nb.name, "kernel is not a two-sided brace");
    to_radical_ring(kernel.brace);
    return pass(nb.name);
  });
}

Results suite_star_normal_circ(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_two_sided(a)) return skip(nb.name, "out of hypothesis");
    auto normals = normal_subgroups(a.circ);
    for (const auto& x : normals)
      for (const auto& y : normals) {
        ElementSet p = star_subgroup(a, x, y);
        if (!is_conjugation_stable(a.circ, p))
          return fail(nb.name, "X*Y is not normal in (A, o)");
      }
    return pass(nb.name);
  });
}

Results suite_star_left_ideal(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (a.order() > kSubgroupSweepCap)
      return skip(nb.name, "out of hypothesis: order above subgroup sweep cap");
    std::vector<ElementSet> left_ideals;
    for (const auto& s : all_subgroups(a.add))
      if (is_left_ideal(a, s)) left_ideals.push_back(s);
    for (const auto& x : normal_subgroups(a.circ))
      for (const auto& i : left_ideals)
        if (!is_left_ideal(a, star_subgroup(a, x, i)))
          return fail(nb.name, "X*I is not a left ideal");
    return pass(nb.name);
  });
}

Results suite_star_normal_add(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_two_sided(a)) return skip(nb.name, "out of hypothesis");
    ElementSet op_sq = a_op_squared(a);
    auto ideals = all_ideals(a);
    for (const auto& i : ideals)
      for (const auto& j : ideals) {
        if (!j.subset_of(op_sq)) continue;
        ElementSet p = star_subgroup(a, i, j);
        if (!is_conjugation_stable(a.add, p))
          return fail(nb.name, "I*J is not normal in (A, +)");
      }
    return pass(nb.name);
  });
}

Results suite_distr_center(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_two_sided(a)) return skip(nb.name, "out of hypothesis");
    ElementSet z = center(a.add);
    for (int c : z.indices())
      for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < a.order(); ++y) {
          if (a.star(c, a.plus(x, y)) != a.plus(a.star(c, x), a.star(c, y)))
            return fail(nb.name, "c*(a+b) does not distribute");
          if (a.star(a.plus(x, y), c) != a.plus(a.star(x, c), a.star(y, c)))
            return fail(nb.name, "(a+b)*c does not distribute");
        }
    return pass(nb.name);
  });
}

Results suite_assoc_center(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_two_sided(a)) return skip(nb.name, "out of hypothesis");
    ElementSet z = center(a.add);
    for (int c : z.indices())
      for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < a.order(); ++y)
          if (a.star(a.star(x, y), c) != a.star(x, a.star(y, c)))
            return fail(nb.name, "(a*b)*c != a*(b*c) for central c");
    return pass(nb.name);
  });
}

Results suite_ideals_triv(const Braces&) {
  Results out;
  for (const auto& ng : catalog_groups()) {
    try {
      auto normals = normal_subgroups(ng.group);
      if (all_ideals(trivial_brace(ng.group)) != normals) {
        out.push_back(fail(ng.name, "ideals of Triv(G) differ from normal subgroups"));
        continue;
      }
      if (all_ideals(almost_trivial(ng.group)) != normals) {
        out.push_back(fail(ng.name, "ideals of opTriv(G) differ from normal subgroups"));
        continue;
      }
      out.push_back(pass(ng.name));
    } catch (const Error& e) {
      out.push_back(fail(ng.name, std::string("error: ") + e.what()));
    }
  }
  return out;
}

Results suite_product_square(const Braces& bs) {
  Results out;
  for (const auto& na : bs) {
    for (const auto& nc : bs) {
      if (na.brace.order() * nc.brace.order() > kProductSquareCap) continue;
      std::string subject = na.name + " x " + nc.name;
      try {
        SkewBrace p = direct_product(na.brace, nc.brace);
        ElementSet sq = a_squared(p);
        ElementSet sa = a_squared(na.brace);
        ElementSet sc = a_squared(nc.brace);
        ElementSet expect(p.order());
        for (int x : sa.indices())
          for (int y : sc.indices()) expect.insert(x * nc.brace.order() + y);
        if (sq != expect) {
          out.push_back(fail(subject, "(AxB)^2 != A^2 x B^2"));
          continue;
        }
        out.push_back(pass(subject));
      } catch (const Error& e) {
        out.push_back(fail(subject, std::string("error: ") + e.what()));
      }
    }
  }
  return out;
}

// --- structure --------------------------------------------------------------

Results suite_weakly_trivial_two_sided(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    if (!is_weakly_trivial(nb.brace)) return skip(nb.name, "out of hypothesis");
    if (!is_two_sided(nb.brace))
      return fail(nb.name, "weakly trivial brace is not two-sided");
    return pass(nb.name);
  });
}

Results suite_ideal_normal_image(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_weakly_trivial(a)) return skip(nb.name, "out of hypothesis");
    if (a.order() > kSubgroupSweepCap)
      return skip(nb.name, "out of hypothesis: order above subgroup sweep cap");
    SubdirectEmbedding emb = subdirect_embedding(a);
    for (const auto& s : all_subgroups(a.add)) {
      ElementSet image(emb.product.order());
      for (int x : s.indices()) image.insert(emb.embedding(x));
      bool ideal = ideal_witness(a, s).is_ideal();
      bool normal_image = is_normal(emb.product.add, image);
      if (ideal != normal_image)
        return fail(nb.name, "ideal test disagrees with image normality for " +
                                 set_str(s));
    }
    return pass(nb.name);
  });
}

Results suite_quotient_weakly_trivial(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_weakly_trivial(a)) return skip(nb.name, "out of hypothesis");
    ElementSet sq = a_squared(a);
    ElementSet op_sq = a_op_squared(a);
    ElementSet sum = subgroup_sum(a, sq, op_sq);
    for (const auto& i : all_ideals(a)) {
      bool quot_wt = is_weakly_trivial(quotient_brace(a, i).brace);
      ElementSet lhs = subgroup_sum(a, i.intersect(sq), i.intersect(op_sq));
      bool criterion = lhs == i.intersect(sum);
      if (quot_wt != criterion)
        return fail(nb.name,
                    "quotient criterion disagrees for ideal " + set_str(i));
    }
    return pass(nb.name);
  });
}

Results suite_derived_length_weakly_trivial(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_weakly_trivial(a)) return skip(nb.name, "out of hypothesis");
    auto dl_add = derived_length(a.add);
    auto dl_circ = derived_length(a.circ);
    if (dl_add.has_value() != dl_circ.has_value())
      return fail(nb.name, "additive and multiplicative solubility disagree");
    if (dl_add) {
      if (*dl_add != *dl_circ)
        return fail(nb.name, "derived lengths differ");
      if (!is_soluble(a)) return fail(nb.name, "brace is not soluble");
    }
    return pass(nb.name);
  });
}

Results suite_nilpotency_class_weakly_trivial(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_weakly_trivial(a)) return skip(nb.name, "out of hypothesis");
    auto nc_add = nilpotency_class(a.add);
    auto nc_circ = nilpotency_class(a.circ);
    if (nc_add.has_value() != nc_circ.has_value())
      return fail(nb.name, "additive and multiplicative nilpotency disagree");
    if (nc_add) {
      if (*nc_add != *nc_circ)
        return fail(nb.name, "nilpotency classes differ");
      if (!is_left_nilpotent(a) || !is_right_nilpotent(a))
        return fail(nb.name, "brace is not left and right nilpotent");
    }
    return pass(nb.name);
  });
}

Results suite_weakly_trivial_nilpotency(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_weakly_trivial(a)) return skip(nb.name, "out of hypothesis");
    bool l = is_left_nilpotent(a);
    bool r = is_right_nilpotent(a);
    bool s = is_strongly_nilpotent(a);
    if (l != r || r != s)
      return fail(nb.name, "left/right/strong nilpotency are not equivalent");
    return pass(nb.name);
  });
}

Results suite_solubility_bound(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_two_sided(a)) return skip(nb.name, "out of hypothesis");
    auto n = derived_length(a.circ);
    if (!n) return skip(nb.name, "out of hypothesis: (A, o) not soluble");
    auto m = derived_length(a.add);
    if (!m) return fail(nb.name, "(A, +) is not soluble");
    if (*m > *n + 1)
      return fail(nb.name, "additive derived length exceeds n + 1");
    return pass(nb.name);
  });
}

Results suite_nilpotent_sum(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_two_sided(a)) return skip(nb.name, "out of hypothesis");
    auto n = nilpotency_class(a.circ);
    if (!n) return skip(nb.name, "out of hypothesis: (A, o) not nilpotent");
    ElementSet sum = subgroup_sum(a, a_squared(a), a_op_squared(a));
    auto cls = nilpotency_class(subgroup_as_group(a.add, sum));
    if (!cls) return fail(nb.name, "(A^2 + A^2_op, +) is not nilpotent");
    if (*cls > *n + 1)
      return fail(nb.name, "nilpotency class of the sum exceeds n + 1");
    return pass(nb.name);
  });
}

Results suite_abelian_by_nilpotent(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_two_sided(a)) return skip(nb.name, "out of hypothesis");
    if (!nilpotency_class(a.circ))
      return skip(nb.name, "out of hypothesis: (A, o) not nilpotent");
    ElementSet k = a_squared(a).intersect(a_op_squared(a));
    if (!subgroup_as_group(a.add, k).is_abelian())
      return fail(nb.name, "A^2 n A^2_op is not additively abelian");
    if (!is_normal(a.add, k))
      return fail(nb.name, "A^2 n A^2_op is not additively normal");
    if (!nilpotency_class(quotient_group(a.add, k).group))
      return fail(nb.name, "(A, +) is not abelian-by-nilpotent");
    ElementSet sum = subgroup_sum(a, a_squared(a), a_op_squared(a));
    if (!nilpotency_class(subgroup_as_group(a.add, sum)))
      return fail(nb.name, "A^2 + A^2_op is not additively nilpotent");
    if (!is_normal(a.add, sum))
      return fail(nb.name, "A^2 + A^2_op is not additively normal");
    if (!quotient_group(a.add, sum).group.is_abelian())
      return fail(nb.name, "(A, +) is not nilpotent-by-abelian");
    return pass(nb.name);
  });
}

Results suite_power_lemma(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_two_sided(a)) return skip(nb.name, "out of hypothesis");
    SeriesReport right = series(a, SeriesKind::right);
    ElementSet z = center(a.add);
    auto term = [&](int idx) {  // A^(idx), 1-based, stable beyond the last term
      int i = std::min(idx - 1, static_cast<int>(right.terms.size()) - 1);
      return right.terms[i];
    };
    int m = -1;
    for (int i = 1; i <= static_cast<int>(right.terms.size()); ++i)
      if (term(i).subset_of(z)) {
        m = i;
        break;
      }
    if (m == -1)
      return skip(nb.name, "out of hypothesis: no central right-series term");
    int kmax = static_cast<int>(right.terms.size()) + 1;
    for (int k = 1; k <= kmax; ++k) {
      if (term(m + k) != star_subgroup(a, term(m), term(k)))
        return fail(nb.name, "A^(m+k) != A^(m) * A^(k)");
      ElementSet iter = term(m);
      for (int i = 1; i < k; ++i) iter = star_subgroup(a, iter, term(m));
      if (term(m * k) != iter)
        return fail(nb.name, "A^(mk) != (A^(m))^(k)");
    }
    return pass(nb.name);
  });
}

Results suite_nilpotent_type_equivalence(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_two_sided(a)) return skip(nb.name, "out of hypothesis");
    if (!nilpotency_class(a.add))
      return skip(nb.name, "out of hypothesis: not of nilpotent type");
    bool l = is_left_nilpotent(a);
    bool r = is_right_nilpotent(a);
    bool s = is_strongly_nilpotent(a);
    if (l != r || r != s)
      return fail(nb.name, "left/right/strong nilpotency are not equivalent");
    return pass(nb.name);
  });
}

Results suite_left_right_strong(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    bool l = is_left_nilpotent(nb.brace);
    bool r = is_right_nilpotent(nb.brace);
    bool s = is_strongly_nilpotent(nb.brace);
    if (s != (l && r))
      return fail(nb.name, "strong nilpotency differs from left and right");
    return pass(nb.name);
  });
}

Results suite_max_condition(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_two_sided(a)) return skip(nb.name, "out of hypothesis");
    if (!nilpotency_class(a.add))
      return skip(nb.name, "out of hypothesis: (A, +) not nilpotent");
    if (!is_strongly_nilpotent(a))
      return fail(nb.name, "brace is not strongly nilpotent");
    if (!nilpotency_class(a.circ))
      return fail(nb.name, "(A, o) is not nilpotent");
    return pass(nb.name);
  });
}

Results suite_simple_classification(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (a.order() < 2 || !is_simple(a) || !is_two_sided(a))
      return skip(nb.name, "out of hypothesis");
    SimpleTwoSidedClass tag = classify_simple_two_sided(a);
    if (tag == SimpleTwoSidedClass::two_sided_brace)
      return fail(nb.name, "finite simple brace classified as a radical ring");
    if (normal_subgroups(a.circ).size() != 2)
      return fail(nb.name, "underlying group is not simple");
    return pass(nb.name);
  });
}

Results suite_subdirect_embedding(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    if (!is_weakly_trivial(nb.brace)) return skip(nb.name, "out of hypothesis");
    SubdirectEmbedding emb = subdirect_embedding(nb.brace);
    int zero_pair = emb.q1.brace.zero() * emb.q2.brace.order() + emb.q2.brace.zero();
    for (int x = 0; x < nb.brace.order(); ++x)
      if (emb.embedding(x) == zero_pair && x != nb.brace.zero())
        return fail(nb.name, "embedding kernel is not trivial");
    return pass(nb.name);
  });
}

Results suite_triple_roundtrip(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    if (!is_weakly_trivial(nb.brace)) return skip(nb.name, "out of hypothesis");
    Triple t = brace_to_triple(nb.brace);
    TripleBrace back = triple_to_brace(t);
    if (back.brace.order() != nb.brace.order())
      return fail(nb.name, "round trip changes the order");
    if (!find_brace_isomorphism(nb.brace, back.brace))
      return fail(nb.name, "round trip brace is not isomorphic");
    return pass(nb.name);
  });
}

Results suite_series_trivial(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    if (!is_trivial_shape(nb.brace)) return skip(nb.name, "out of hypothesis");
    for (SeriesKind k : {SeriesKind::left, SeriesKind::right, SeriesKind::strong,
                         SeriesKind::derived}) {
      SeriesReport r = series(nb.brace, k);
      if (!r.reaches_zero || r.length > 1)
        return fail(nb.name, series_kind_name(k) + " series does not vanish in one step");
    }
    return pass(nb.name);
  });
}

Results suite_series_optriv(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_almost_trivial_shape(a)) return skip(nb.name, "out of hypothesis");
    SeriesReport right = series(a, SeriesKind::right);
    std::vector<ElementSet> lcs = lower_central_series(a.circ);
    if (right.terms != lcs)
      return fail(nb.name, "right series differs from the lower central series");
    bool nilp = nilpotency_class(a.circ).has_value();
    if (right.reaches_zero != nilp)
      return fail(nb.name, "right nilpotency differs from group nilpotency");
    return pass(nb.name);
  });
}

// --- primeness --------------------------------------------------------------

Results suite_semiprimeness_equivalence(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    bool plain = is_semiprime(nb.brace);
    bool strong = is_strongly_semiprime(nb.brace);
    if (!is_two_sided(nb.brace)) {
      std::string note = "out of hypothesis";
      if (plain != strong) note += "; predicates disagree on this brace";
      return skip(nb.name, note);
    }
    if (plain != strong)
      return fail(nb.name, "semiprime and strongly semiprime disagree");
    return pass(nb.name);
  });
}

Results suite_primeness_equivalence(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    bool plain = is_prime(nb.brace);
    bool strong = is_strongly_prime(nb.brace);
    if (!is_two_sided(nb.brace)) {
      std::string note = "out of hypothesis";
      if (plain != strong) note += "; predicates disagree on this brace";
      return skip(nb.name, note);
    }
    if (plain != strong)
      return fail(nb.name, "prime and strongly prime disagree");
    return pass(nb.name);
  });
}

Results suite_strong_implies_plain(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    if (is_strongly_prime(nb.brace) && !is_prime(nb.brace))
      return fail(nb.name, "strongly prime but not prime");
    if (is_strongly_semiprime(nb.brace) && !is_semiprime(nb.brace))
      return fail(nb.name, "strongly semiprime but not semiprime");
    return pass(nb.name);
  });
}

std::vector<ElementSet> nonzero_ideals_of(const SkewBrace& a) {
  std::vector<ElementSet> out;
  ElementSet zero = zset(a);
  for (auto& i : all_ideals(a))
    if (i != zero) out.push_back(i);
  return out;
}

Results suite_closure_nested_chain(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    for (const auto& i : nonzero_ideals_of(a)) {
      StarClosure c = star_closure(a, {i});
      ElementSet cur = i;
      while (true) {
        if (!c.reached.count(cur))
          return fail(nb.name, "nested chain escapes the closure");
        ElementSet next = star_subgroup(a, cur, cur);
        if (next == cur) break;
        cur = next;
      }
    }
    return pass(nb.name);
  });
}

Results suite_closure_order_independence(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    auto gens = nonzero_ideals_of(a);
    if (gens.empty()) return skip(nb.name, "out of hypothesis: no non-zero ideals");
    StarClosure forward = star_closure(a, gens);
    auto rev = gens;
    std::reverse(rev.begin(), rev.end());
    StarClosure backward = star_closure(a, rev);
    if (forward.reached != backward.reached)
      return fail(nb.name, "closure depends on the worklist order");
    return pass(nb.name);
  });
}

Results suite_closure_commutator_series(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (!is_almost_trivial_shape(a)) return skip(nb.name, "out of hypothesis");
    const FiniteGroup& g = a.circ;
    for (const auto& i : nonzero_ideals_of(a)) {
      StarClosure c = star_closure(a, {i});
      ElementSet cur = i;
      bool reaches_triv = false;
      while (true) {
        if (!c.reached.count(cur))
          return fail(nb.name, "derived series term missing from the closure");
        if (cur == zset(a)) {
          reaches_triv = true;
          break;
        }
        ElementSet next = commutator_of(g, cur, cur);
        if (next == cur) break;
        cur = next;
      }
      if (c.contains_zero != reaches_triv)
        return fail(nb.name, "zero reachability differs from group solubility");
    }
    return pass(nb.name);
  });
}

Results suite_brute_force_agreement(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    const SkewBrace& a = nb.brace;
    if (a.order() > kBruteForceCap)
      return skip(nb.name, "out of hypothesis: order above brute-force cap");
    ElementSet zero = zset(a);
    auto ideals = nonzero_ideals_of(a);
    for (const auto& i : ideals) {
      StarClosure c = star_closure(a, {i});
      auto brute = brute_force_products(a, {i}, 6);
      for (const auto& v : brute)
        if (!c.reached.count(v))
          return fail(nb.name, "brute-force value missing from the closure");
      if (c.contains_zero != (brute.count(zero) > 0))
        return fail(nb.name, "zero reachability disagrees at depth 6");
    }
    if (!ideals.empty()) {
      StarClosure c = star_closure(a, ideals);
      auto brute = brute_force_products(a, ideals, 6);
      for (const auto& v : brute)
        if (!c.reached.count(v))
          return fail(nb.name, "joint brute-force value missing from the closure");
      if (c.contains_zero != (brute.count(zero) > 0))
        return fail(nb.name, "joint zero reachability disagrees at depth 6");
    }
    return pass(nb.name);
  });
}

// --- ybe --------------------------------------------------------------------

Results suite_braid(const Braces& bs) {
  return sweep(bs, [](const NamedBrace& nb) {
    SetSolution s = solution_from_brace(nb.brace);
    if (!check_braid(s) || !is_nondegenerate(s) || !is_bijective(s))
      return fail(nb.name, "solution checks fail");
    SetSolution op = solution_from_brace(opposite(nb.brace));
    if (!check_braid(op) || !is_nondegenerate(op) || !is_bijective(op))
      return fail(nb.name, "opposite solution checks fail");
    return pass(nb.name);
  });
}

// --- group_core -------------------------------------------------------------

Results suite_group_axioms(const Braces&) {
  Results out;
  for (const auto& ng : catalog_groups()) {
    try {
      ng.group.check_axioms();
      out.push_back(pass(ng.name));
    } catch (const Error& e) {
      out.push_back(fail(ng.name, std::string("error: ") + e.what()));
    }
  }
  return out;
}

Results suite_group_abelian_quotient(const Braces&) {
  Results out;
  for (const auto& ng : catalog_groups()) {
    try {
      if (!abelianization(ng.group).group.is_abelian())
        out.push_back(fail(ng.name, "abelianization is not abelian"));
      else
        out.push_back(pass(ng.name));
    } catch (const Error& e) {
      out.push_back(fail(ng.name, std::string("error: ") + e.what()));
    }
  }
  return out;
}

Results suite_group_normal_closure(const Braces&) {
  Results out;
  for (const auto& ng : catalog_groups()) {
    try {
      auto normals = normal_subgroups(ng.group);
      std::set<ElementSet> index(normals.begin(), normals.end());
      bool ok = true;
      for (const auto& n : normals) {
        for (const auto& m : normals) {
          if (!index.count(n.intersect(m))) ok = false;
          if (!index.count(subgroup_generated(ng.group, n.unite(m)))) ok = false;
        }
        if (!ok) break;
      }
      out.push_back(ok ? pass(ng.name)
                       : fail(ng.name, "normal subgroups not closed under meet/join"));
    } catch (const Error& e) {
      out.push_back(fail(ng.name, std::string("error: ") + e.what()));
    }
  }
  return out;
}

Results suite_group_iso_roundtrip(const Braces&) {
  Results out;
  for (const auto& ng : catalog_groups()) {
    try {
      auto w = find_isomorphism(ng.group, ng.group);
      if (!w) {
        out.push_back(fail(ng.name, "no self-isomorphism found"));
        continue;
      }
      GroupHom round = compose(inverse_hom(*w), *w);
      bool ident = true;
      for (int x = 0; x < ng.group.order; ++x)
        if (round(x) != x) ident = false;
      out.push_back(ident ? pass(ng.name)
                          : fail(ng.name, "witness does not round-trip"));
    } catch (const Error& e) {
      out.push_back(fail(ng.name, std::string("error: ") + e.what()));
    }
  }
  return out;
}

}  // namespace

const std::map<std::string, SuiteFn>& suite_registry() {
  static const std::map<std::string, SuiteFn> registry = {
      {"group:axioms", suite_group_axioms},
      {"group:abelian-quotient", suite_group_abelian_quotient},
      {"group:normal-closure", suite_group_normal_closure},
      {"group:iso-roundtrip", suite_group_iso_roundtrip},
      {"lemma:distributivity", suite_distributivity},
      {"lemma:lambda-homomorphism", suite_lambda_homomorphism},
      {"prop:inner-automorphisms", suite_inner_automorphisms},
      {"lemma:opposite-involution", suite_opposite_involution},
      {"prop:star-op-opposite", suite_star_op_opposite},
      {"cor:characteristic-ideal", suite_characteristic_ideal},
      {"prop:a-squared-ideal", suite_a_squared_ideal},
      {"lemma:centralize", suite_centralize},
      {"theorem:central-intersection", suite_central_intersection},
      {"cor:extension-weakly-trivial", suite_extension_weakly_trivial},
      {"lemma:star-normal-circ", suite_star_normal_circ},
      {"lemma:star-left-ideal", suite_star_left_ideal},
      {"lemma:star-normal-add", suite_star_normal_add},
      {"lemma:distr-center", suite_distr_center},
      {"lemma:assoc-center", suite_assoc_center},
      {"prop:ideals-triv", suite_ideals_triv},
      {"prop:product-square", suite_product_square},
      {"cor:weakly-trivial-two-sided", suite_weakly_trivial_two_sided},
      {"lemma:ideal-normal-image", suite_ideal_normal_image},
      {"lemma:quotient-weakly-trivial", suite_quotient_weakly_trivial},
      {"cor:derived-length-weakly-trivial", suite_derived_length_weakly_trivial},
      {"cor:nilpotency-class-weakly-trivial", suite_nilpotency_class_weakly_trivial},
      {"prop:weakly-trivial-nilpotency", suite_weakly_trivial_nilpotency},
      {"theorem:solubility-bound", suite_solubility_bound},
      {"lemma:nilpotent-sum", suite_nilpotent_sum},
      {"theorem:abelian-by-nilpotent", suite_abelian_by_nilpotent},
      {"lemma:power", suite_power_lemma},
      {"theorem:nilpotent-type-equivalence", suite_nilpotent_type_equivalence},
      {"theorem:left-right-strong", suite_left_right_strong},
      {"theorem:max-condition", suite_max_condition},
      {"theorem:simple-classification", suite_simple_classification},
      {"prop:subdirect-embedding", suite_subdirect_embedding},
      {"prop:triple-roundtrip", suite_triple_roundtrip},
      {"prop:series-trivial", suite_series_trivial},
      {"prop:series-optriv", suite_series_optriv},
      {"theorem:strong-semiprimeness-equivalence", suite_semiprimeness_equivalence},
      {"theorem:strong-primeness-equivalence", suite_primeness_equivalence},
      {"prop:strong-implies-plain", suite_strong_implies_plain},
      {"prop:closure-nested-chain", suite_closure_nested_chain},
      {"prop:closure-order-independence", suite_closure_order_independence},
      {"prop:closure-commutator-series", suite_closure_commutator_series},
      {"prop:brute-force-agreement", suite_brute_force_agreement},
      {"ybe:braid", suite_braid},
  };
  return registry;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suite_registry()) names.push_back(name);
  return names;
}

VerifySummary run_suites(const std::string& selector, const std::string& filter,
                         std::vector<SuiteResult>& results) {
  const auto& registry = suite_registry();
  std::vector<std::pair<std::string, SuiteFn>> to_run;
  if (selector == "all") {
    to_run.assign(registry.begin(), registry.end());
  } else {
    auto it = registry.find(selector);
    if (it == registry.end())
      throw InvalidArgumentError("unknown verification selector: " + selector);
    to_run.push_back(*it);
  }

  Braces subjects;
  for (const auto& nb : catalog())
    if (filter.empty() || nb.name.find(filter) != std::string::npos)
      subjects.push_back(nb);

  VerifySummary summary;
  for (const auto& [name, fn] : to_run) {
    for (auto& r : fn(subjects)) {
      if (r.status == "pass")
        ++summary.passed;
      else if (r.status == "fail")
        ++summary.failed;
      else
        ++summary.skipped;
      results.push_back({name + " / " + r.subject, r.status, r.detail});
    }
  }
  return summary;
}

}  // namespace braceforge
