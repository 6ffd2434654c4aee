#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "braceforge/catalog.hpp"
#include "braceforge/errors.hpp"
#include "braceforge/primeness.hpp"

using namespace braceforge;

TEST_CASE("semiprimeness") {
  SkewBrace t5 = trivial_brace(make_cyclic(5));
  SemiprimeCheck c5 = semiprime_check(t5);
  CHECK(!c5.holds);
  REQUIRE(c5.witness.has_value());
  CHECK(*c5.witness == ElementSet::full(5));

  SkewBrace at_d8 = almost_trivial(make_dihedral(8));
  SemiprimeCheck cd8 = semiprime_check(at_d8);
  CHECK(!cd8.holds);
  REQUIRE(cd8.witness.has_value());
  CHECK(*cd8.witness == ElementSet::of(8, {0, 2}));  // the center of D8

  CHECK(is_semiprime(almost_trivial(make_alternating(5))));
}

TEST_CASE("primeness") {
  CHECK(is_prime(almost_trivial(make_alternating(5))));
  CHECK(!is_prime(trivial_brace(make_cyclic(5))));
  PrimeCheck pc = prime_check(trivial_brace(make_cyclic(4)));
  CHECK(!pc.holds);
  REQUIRE(pc.witness.has_value());
  CHECK(pc.witness->first == ElementSet::of(4, {0, 2}));
}

TEST_CASE("star closure") {
  FiniteGroup d8 = make_dihedral(8);
  SkewBrace at = almost_trivial(d8);
  StarClosure c = star_closure(at, {ElementSet::full(8)});
  std::set<ElementSet> expect = {ElementSet::full(8), ElementSet::of(8, {0, 2}),
                                 ElementSet::of(8, {0})};
  CHECK(c.reached == expect);
  CHECK(c.contains_zero);

  SkewBrace t = trivial_brace(d8);
  StarClosure ct = star_closure(t, {ElementSet::full(8)});
  CHECK(ct.contains_zero);
  CHECK(ct.reached.size() == 2);

  CHECK_THROWS_AS(star_closure(t, {ElementSet::of(8, {0})}), PreconditionError);
  CHECK_THROWS_AS(star_closure(t, {ElementSet::of(8, {0, 4})}), PreconditionError);
}

TEST_CASE("closure is independent of generator order") {
  const SkewBrace& at = catalog_brace("optriv:d8");
  std::vector<ElementSet> gens;
  for (const auto& i : all_ideals(at))
    if (i.size() > 1) gens.push_back(i);
  StarClosure fwd = star_closure(at, gens);
  std::reverse(gens.begin(), gens.end());
  StarClosure bwd = star_closure(at, gens);
  CHECK(fwd.reached == bwd.reached);
  CHECK(fwd.contains_zero == bwd.contains_zero);
}

TEST_CASE("strong primeness predicates") {
  CHECK(!is_strongly_semiprime(trivial_brace(make_cyclic(5))));
  CHECK(!is_strongly_prime(trivial_brace(make_cyclic(5))));
  CHECK(is_strongly_semiprime(almost_trivial(make_alternating(5))));
  CHECK(is_strongly_prime(almost_trivial(make_alternating(5))));

  // witness tree for the failure on opTriv(D8): center * center = {0}
  StrongCheck sc = strongly_semiprime_check(almost_trivial(make_dihedral(8)));
  CHECK(!sc.holds);
  REQUIRE(sc.witness.has_value());
  CHECK(sc.witness->value == ElementSet::of(8, {0}));
  REQUIRE(!sc.witness->is_leaf());
  CHECK(sc.witness->left->value == ElementSet::of(8, {0, 2}));
  CHECK(sc.witness->right->value == ElementSet::of(8, {0, 2}));
}

TEST_CASE("brute force product trees") {
  const SkewBrace& at = catalog_brace("optriv:d8");
  std::vector<ElementSet> ideals;
  for (const auto& i : all_ideals(at))
    if (i.size() > 1) ideals.push_back(i);

  auto depth1 = brute_force_products(at, ideals, 1);
  CHECK(depth1 == std::set<ElementSet>(ideals.begin(), ideals.end()));

  auto depth2 = brute_force_products(at, ideals, 2);
  for (const auto& x : ideals)
    for (const auto& y : ideals) CHECK(depth2.count(star_subgroup(at, x, y)));

  StarClosure c = star_closure(at, ideals);
  auto depth6 = brute_force_products(at, ideals, 6);
  for (const auto& v : depth6) CHECK(c.reached.count(v));
  CHECK(c.contains_zero == (depth6.count(ElementSet::of(8, {0})) > 0));

  CHECK_THROWS_AS(brute_force_products(at, ideals, 9), CapacityError);
}

TEST_CASE("nested chain is reached") {
  const SkewBrace& at = catalog_brace("optriv:a4");
  for (const auto& i : all_ideals(at)) {
    if (i.size() == 1) continue;
    StarClosure c = star_closure(at, {i});
    ElementSet cur = i;
    while (true) {
      CHECK(c.reached.count(cur));
      ElementSet next = star_subgroup(at, cur, cur);
      if (next == cur) break;
      cur = next;
    }
  }
}
