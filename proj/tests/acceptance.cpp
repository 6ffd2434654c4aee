// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries a wall-clock budget that is part of the
// check.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "braceforge/errors.hpp"
#include "braceforge/json_io.hpp"
#include "braceforge/verify.hpp"
#include "braceforge/ybe.hpp"

using namespace braceforge;

namespace {

struct Criterion {
  std::string label;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

ElementSet zset(const SkewBrace& a) {
  return ElementSet::singleton(a.order(), a.zero());
}

bool criterion_wt100(std::string& why) {
  SkewBrace a = construct_brace("triple:c5c4,c5c4,id");
  if (a.order() != 100) return why = "order is not 100", false;
  auto dl_add = derived_length(a.add);
  auto dl_circ = derived_length(a.circ);
  if (dl_add != std::optional<int>(2)) return why = "additive derived length != 2", false;
  if (dl_circ != std::optional<int>(2)) return why = "multiplicative derived length != 2", false;
  if (find_isomorphism(a.add, a.circ).has_value())
    return why = "additive and multiplicative groups are isomorphic", false;
  return true;
}

bool criterion_wt_d8(std::string& why) {
  TripleBrace tb =
      triple_to_brace(make_triple_id(make_dihedral(8), make_dihedral(8)));
  const SkewBrace& a = tb.brace;
  if (a.order() != 16) return why = "order is not 16", false;

  ElementSet z = center(make_dihedral(8));
  ElementSet diag(a.order());
  for (int e = 0; e < a.order(); ++e)
    if (tb.to_triv_g(e) == tb.to_optriv_h(e) && z.contains(tb.to_triv_g(e)))
      diag.insert(e);
  if (diag.size() != 2) return why = "diagonal center does not have order 2", false;
  if (!ideal_witness(a, diag).is_ideal())
    return why = "diagonal center is not an ideal", false;

  if (is_weakly_trivial(quotient_brace(a, diag).brace))
    return why = "quotient is weakly trivial", false;

  ElementSet sq = a_squared(a);
  ElementSet op_sq = a_op_squared(a);
  ElementSet zero = zset(a);
  if (diag.intersect(sq) != zero || diag.intersect(op_sq) != zero)
    return why = "I does not intersect A^2 and A^2_op trivially", false;
  ElementSet lhs = subgroup_sum(a, diag.intersect(sq), diag.intersect(op_sq));
  ElementSet rhs = diag.intersect(subgroup_sum(a, sq, op_sq));
  if (lhs == rhs) return why = "quotient criterion does not fire", false;
  return true;
}

bool criterion_sd(std::string& why) {
  const SkewBrace& a = catalog_brace("sd:c2-c3");
  auto w = right_brace_violation(a);
  if (!w) return why = "no right brace violation", false;
  auto [x, y, c] = *w;
  if (a.times(a.plus(x, y), c) ==
      a.plus(a.plus(a.times(x, c), a.neg(c)), a.times(y, c)))
    return why = "witness does not violate the identity", false;
  if (!inner_automorphism_violation(a))
    return why = "no inner automorphism violation", false;

  IdealWitness iw = ideal_witness(a, ElementSet::of(6, {0, 3}));
  if (!iw.is_add_subgroup || !iw.is_lambda_stable || !iw.is_add_normal)
    return why = "C2 x {0} is not a lambda-stable normal additive subgroup", false;
  if (iw.is_circ_normal)
    return why = "C2 x {0} is circ-normal", false;
  return true;
}

bool criterion_structural_suite(std::string& why) {
  const auto& braces = catalog();
  if (braces.size() < 30) return why = "catalog has fewer than 30 braces", false;
  int min_order = 1 << 30, max_order = 0;
  for (const auto& nb : braces) {
    min_order = std::min(min_order, nb.brace.order());
    max_order = std::max(max_order, nb.brace.order());
  }
  if (min_order != 1 || max_order != 100)
    return why = "catalog does not span orders 1..100", false;

  std::vector<SuiteResult> results;
  VerifySummary s = run_suites("all", "", results);
  if (s.failed != 0) {
    std::ostringstream os;
    os << s.failed << " suite failures:";
    for (const auto& r : results)
      if (r.status == "fail") os << " [" << r.subject << ": " << r.detail << "]";
    why = os.str();
    return false;
  }
  return true;
}

bool criterion_primeness(std::string& why) {
  for (const auto& nb : catalog()) {
    if (!is_two_sided(nb.brace)) continue;
    if (is_prime(nb.brace) != is_strongly_prime(nb.brace))
      return why = nb.name + ": prime != strongly prime", false;
    if (is_semiprime(nb.brace) != is_strongly_semiprime(nb.brace))
      return why = nb.name + ": semiprime != strongly semiprime", false;
  }
  for (const auto& nb : catalog()) {
    const SkewBrace& a = nb.brace;
    if (a.order() > 32) continue;
    ElementSet zero = zset(a);
    std::vector<ElementSet> ideals;
    for (const auto& i : all_ideals(a))
      if (i != zero) ideals.push_back(i);
    for (const auto& i : ideals) {
      StarClosure c = star_closure(a, {i});
      auto brute = brute_force_products(a, {i}, 6);
      if (c.contains_zero != (brute.count(zero) > 0))
        return why = nb.name + ": closure and depth-6 oracle disagree", false;
    }
    if (!ideals.empty()) {
      StarClosure c = star_closure(a, ideals);
      auto brute = brute_force_products(a, ideals, 6);
      if (c.contains_zero != (brute.count(zero) > 0))
        return why = nb.name + ": joint closure and depth-6 oracle disagree", false;
    }
  }
  return true;
}

bool criterion_goursat(std::string& why) {
  // Round-trips over Goursat data of every catalog pair with factors of
  // order <= 24 (one representative isomorphism per ideal pair).
  std::vector<const NamedBrace*> small;
  for (const auto& nb : catalog())
    if (nb.brace.order() <= 24) small.push_back(&nb);

  struct QuotientCache {
    std::vector<ElementSet> ideals;
    std::vector<BraceWithProjection> quotients;
  };
  std::vector<QuotientCache> cache(small.size());
  for (std::size_t i = 0; i < small.size(); ++i) {
    cache[i].ideals = all_ideals(small[i]->brace);
    for (const auto& ideal : cache[i].ideals)
      cache[i].quotients.push_back(quotient_brace(small[i]->brace, ideal));
  }

  int data_checked = 0;
  for (std::size_t ai = 0; ai < small.size(); ++ai) {
    const SkewBrace& a = small[ai]->brace;
    for (std::size_t bi = 0; bi < small.size(); ++bi) {
      const SkewBrace& b = small[bi]->brace;
      for (std::size_t ii = 0; ii < cache[ai].ideals.size(); ++ii) {
        for (std::size_t jj = 0; jj < cache[bi].ideals.size(); ++jj) {
          const BraceWithProjection& qa = cache[ai].quotients[ii];
          const BraceWithProjection& qb = cache[bi].quotients[jj];
          if (qa.brace.order() != qb.brace.order()) continue;
          auto rho = find_brace_isomorphism(qa.brace, qb.brace);
          if (!rho) continue;
          GoursatDatum datum{cache[ai].ideals[ii], cache[bi].ideals[jj], qa, qb,
                             *rho};
          ElementSet subset = goursat_subset(a, b, datum);
          GoursatDatum back = goursat_decompose(a, b, subset);
          if (back.i != datum.i || back.j != datum.j)
            return why = small[ai]->name + " x " + small[bi]->name +
                         ": ideals change under the round trip",
                   false;
          if (back.rho.map != datum.rho.map)
            return why = small[ai]->name + " x " + small[bi]->name +
                         ": graph map changes under the round trip",
                   false;
          if (goursat_subset(a, b, back) != subset)
            return why = small[ai]->name + " x " + small[bi]->name +
                         ": subdirect product changes under the round trip",
                   false;
          ++data_checked;
        }
      }
    }
  }
  if (data_checked < 100)
    return why = "unexpectedly few Goursat data checked", false;

  // Exhaustive sweep over subdirect products of very small pairs.
  for (std::size_t ai = 0; ai < small.size(); ++ai) {
    const SkewBrace& a = small[ai]->brace;
    for (std::size_t bi = 0; bi < small.size(); ++bi) {
      const SkewBrace& b = small[bi]->brace;
      if (a.order() * b.order() > 36) continue;
      SkewBrace prod = direct_product(a, b);
      for (const auto& s : sub_skew_braces(prod)) {
        ElementSet first(a.order()), second(b.order());
        for (int p : s.indices()) {
          first.insert(p / b.order());
          second.insert(p % b.order());
        }
        if (first.size() != a.order() || second.size() != b.order()) continue;
        GoursatDatum d = goursat_decompose(a, b, s);
        if (goursat_subset(a, b, d) != s)
          return why = small[ai]->name + " x " + small[bi]->name +
                       ": exhaustive round trip fails",
                 false;
      }
    }
  }

  // Triple classification round trip on every weakly trivial catalog brace.
  for (const auto& nb : catalog()) {
    if (!is_weakly_trivial(nb.brace)) continue;
    TripleBrace back = triple_to_brace(brace_to_triple(nb.brace));
    if (!find_brace_isomorphism(nb.brace, back.brace))
      return why = nb.name + ": triple round trip is not isomorphic", false;
  }
  return true;
}

bool criterion_ybe(std::string& why) {
  for (const auto& nb : catalog()) {
    SetSolution s = solution_from_brace(nb.brace);
    if (!is_bijective(s) || !is_nondegenerate(s) || !check_braid(s))
      return why = nb.name + ": solution checks fail", false;
  }
  return true;
}

bool criterion_determinism(std::string& why) {
  for (const auto& nb : catalog()) {
    std::string first = analysis_report(nb.name, nb.brace).dump(2);
    std::string second = analysis_report(nb.name, nb.brace).dump(2);
    if (first != second) return why = nb.name + ": reports differ", false;
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"wt100 reproduction", 10.0, criterion_wt100},
      {"wt-d8 example reproduction", 1.0, criterion_wt_d8},
      {"two-sidedness counterexample sd:c2-c3", 1.0, criterion_sd},
      {"structural theorem suite over the catalog", 60.0,
       criterion_structural_suite},
      {"primeness equivalence and depth-6 oracle", 120.0, criterion_primeness},
      {"Goursat, pullback and triple round trips", 60.0, criterion_goursat},
      {"Yang-Baxter solutions for the whole catalog", 60.0, criterion_ybe},
      {"deterministic analysis reports", 60.0, criterion_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    std::string why;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(why);
    } catch (const Error& e) {
      ok = false;
      why = std::string("error: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && elapsed > c.budget_seconds) {
      ok = false;
      why = "budget exceeded";
    }
    std::printf("%s  criterion %zu: %s (%.2f s%s)\n", ok ? "PASS" : "FAIL",
                i + 1, c.label.c_str(), elapsed,
                why.empty() ? "" : (std::string("; ") + why).c_str());
    if (!ok) ++failures;
  }
  if (failures == 0)
    std::printf("all %zu acceptance criteria pass\n", criteria.size());
  else
    std::printf("%d acceptance criteria failed\n", failures);
  return failures;
}
