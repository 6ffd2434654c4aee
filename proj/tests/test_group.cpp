#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "braceforge/errors.hpp"
#include "braceforge/group.hpp"

using namespace braceforge;

namespace {

// Independent order oracle: repeated multiplication.
int order_by_iteration(const FiniteGroup& g, int a) {
  int x = a, k = 1;
  while (x != g.identity) {
    x = g.op(x, a);
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("cyclic groups") {
  FiniteGroup c1 = make_cyclic(1);
  CHECK(c1.order == 1);
  CHECK(c1.table == std::vector<std::vector<int>>{{0}});

  FiniteGroup c4 = make_cyclic(4);
  CHECK(c4.table[1][3] == 0);
  CHECK(c4.inverses[1] == 3);
  CHECK(c4.is_abelian());

  FiniteGroup c5 = make_cyclic(5);
  for (int a = 1; a < 5; ++a) CHECK(order_by_iteration(c5, a) == 5);

  CHECK_THROWS_AS(make_cyclic(0), InvalidArgumentError);
}

TEST_CASE("dihedral groups") {
  FiniteGroup d8 = make_dihedral(8);
  CHECK(d8.order == 8);
  CHECK(center(d8).size() == 2);
  CHECK(commutator_subgroup(d8).size() == 2);
  CHECK(center(d8) == commutator_subgroup(d8));

  FiniteGroup d2 = make_dihedral(2);
  CHECK(find_isomorphism(d2, make_cyclic(2)).has_value());

  CHECK_THROWS_AS(make_dihedral(7), InvalidArgumentError);
  CHECK_THROWS_AS(make_dihedral(0), InvalidArgumentError);
}

TEST_CASE("presented C5xC4 group") {
  FiniteGroup g = make_presented_c5_c4();
  CHECK(g.order == 20);
  // a^k b^l has index 4k + l; a = 4, b = 1
  const int a = 4, b = 1;
  ElementSet derived = commutator_subgroup(g);
  CHECK(derived == ElementSet::of(20, {0, 4, 8, 12, 16}));
  CHECK(derived.size() == 5);

  GroupWithProjection ab = abelianization(g);
  CHECK(ab.group.order == 4);
  CHECK(find_isomorphism(ab.group, make_cyclic(4)).has_value());

  // b^-1 a b = a^2
  int conj = g.op(g.op(g.inv(b), a), b);
  CHECK(conj == g.op(a, a));
}

TEST_CASE("holomorph of C_p") {
  FiniteGroup h5 = make_holomorph_cp(5);
  CHECK(h5.order == 20);
  CHECK(find_isomorphism(h5, make_presented_c5_c4()).has_value());

  FiniteGroup h3 = make_holomorph_cp(3);
  CHECK(h3.order == 6);
  CHECK(!h3.is_abelian());
  CHECK(find_isomorphism(h3, make_dihedral(6)).has_value());

  FiniteGroup h2 = make_holomorph_cp(2);
  CHECK(h2.order == 2);
  CHECK(h2.is_abelian());

  CHECK_THROWS_AS(make_holomorph_cp(4), InvalidArgumentError);
  CHECK_THROWS_AS(make_holomorph_cp(1), InvalidArgumentError);
}

TEST_CASE("quaternion and alternating tables") {
  FiniteGroup q8 = make_quaternion8();
  CHECK(q8.order == 8);
  CHECK(center(q8) == ElementSet::of(8, {0, 4}));
  CHECK(commutator_subgroup(q8) == ElementSet::of(8, {0, 4}));
  // every subgroup of Q8 is normal
  for (const auto& s : all_subgroups(q8)) CHECK(is_normal(q8, s));

  FiniteGroup a4 = make_alternating(4);
  CHECK(a4.order == 12);
  CHECK(commutator_subgroup(a4).size() == 4);
  CHECK(!nilpotency_class(a4).has_value());

  FiniteGroup a5 = make_alternating(5);
  CHECK(a5.order == 60);
  CHECK(normal_subgroups(a5).size() == 2);
  CHECK(!derived_length(a5).has_value());
}

TEST_CASE("table validation rejects bad input") {
  // Latin square with identity and inverses but no associativity.
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table(loop), AxiomError);

  std::vector<std::vector<int>> dup = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(FiniteGroup::from_table(dup), AxiomError);

  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 0}}, {"only-one-label"}),
                  InvalidArgumentError);
}

TEST_CASE("subgroup generation") {
  FiniteGroup c4 = make_cyclic(4);
  CHECK(subgroup_generated(c4, ElementSet::empty(4)) == ElementSet::of(4, {0}));
  CHECK(subgroup_generated(c4, ElementSet::of(4, {1})) == ElementSet::full(4));

  FiniteGroup d8 = make_dihedral(8);
  ElementSet refl = subgroup_generated(d8, ElementSet::of(8, {4}));
  CHECK(refl == ElementSet::of(8, {0, 4}));
}

TEST_CASE("normality") {
  FiniteGroup d6 = make_dihedral(6);
  CHECK(is_normal(d6, ElementSet::of(6, {0})));
  ElementSet rot3 = ElementSet::of(6, {0, 1, 2});
  CHECK(is_normal(d6, rot3));
  ElementSet refl = ElementSet::of(6, {0, 3});
  CHECK(!is_normal(d6, refl));
  CHECK_THROWS_AS(is_normal(d6, ElementSet::of(6, {1, 2})), PreconditionError);
}

TEST_CASE("normal subgroup enumeration") {
  CHECK(normal_subgroups(make_cyclic(4)).size() == 3);
  auto d6_normals = normal_subgroups(make_dihedral(6));
  CHECK(d6_normals.size() == 3);
  CHECK(d6_normals[1] == ElementSet::of(6, {0, 1, 2}));
  CHECK(normal_subgroups(make_cyclic(1)).size() == 1);
}

TEST_CASE("center, commutators, abelianization") {
  FiniteGroup c6 = make_cyclic(6);
  CHECK(center(c6) == ElementSet::full(6));
  CHECK(commutator_subgroup(c6) == ElementSet::of(6, {0}));
  GroupWithProjection ab = abelianization(c6);
  CHECK(find_isomorphism(ab.group, c6).has_value());
}

TEST_CASE("quotients") {
  FiniteGroup d8 = make_dihedral(8);
  GroupWithProjection q1 = quotient_group(d8, ElementSet::full(8));
  CHECK(q1.group.order == 1);
  GroupWithProjection q2 = quotient_group(d8, ElementSet::of(8, {0}));
  CHECK(q2.group.order == 8);
  CHECK(find_isomorphism(q2.group, d8).has_value());
  GroupWithProjection q3 = quotient_group(d8, center(d8));
  CHECK(q3.group.order == 4);
  CHECK(q3.group.is_abelian());
  CHECK_THROWS_AS(quotient_group(make_dihedral(6), ElementSet::of(6, {0, 3})),
                  PreconditionError);
}

TEST_CASE("derived length and nilpotency class") {
  FiniteGroup c6 = make_cyclic(6);
  CHECK(derived_length(c6) == 1);
  CHECK(nilpotency_class(c6) == 1);

  CHECK(nilpotency_class(make_dihedral(8)) == 2);

  FiniteGroup g = make_presented_c5_c4();
  CHECK(derived_length(g) == 2);
  CHECK(!nilpotency_class(g).has_value());

  FiniteGroup c1 = make_cyclic(1);
  CHECK(derived_length(c1) == 0);
  CHECK(nilpotency_class(c1) == 0);
}

TEST_CASE("isomorphism search") {
  FiniteGroup c4 = make_cyclic(4);
  auto self = find_isomorphism(c4, c4);
  REQUIRE(self.has_value());
  GroupHom round = compose(inverse_hom(*self), *self);
  for (int x = 0; x < 4; ++x) CHECK(round(x) == x);

  FiniteGroup v4 = product_group(make_cyclic(2), make_cyclic(2));
  CHECK(!find_isomorphism(c4, v4).has_value());

  CHECK_THROWS_AS(find_isomorphism(make_cyclic(250), make_cyclic(250)),
                  CapacityError);
}

TEST_CASE("automorphisms and characteristic subgroups") {
  FiniteGroup d8 = make_dihedral(8);
  auto autos = automorphisms(d8);
  CHECK(autos.size() == 8);
  auto chars = characteristic_subgroups(d8);
  // {e}, center, <r>, D8 are characteristic in D8
  CHECK(std::count(chars.begin(), chars.end(), center(d8)) == 1);
  CHECK(std::count(chars.begin(), chars.end(), ElementSet::of(8, {0, 1, 2, 3})) == 1);
  FiniteGroup v4 = product_group(make_cyclic(2), make_cyclic(2));
  CHECK(automorphisms(v4).size() == 6);
  CHECK(characteristic_subgroups(v4).size() == 2);
}

TEST_CASE("product and opposite groups") {
  FiniteGroup d6 = make_dihedral(6);
  FiniteGroup op = opposite_group(d6);
  op.check_axioms();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(op.op(i, j) == d6.op(j, i));

  FiniteGroup p = product_group(d6, make_cyclic(2));
  CHECK(p.order == 12);
  p.check_axioms();
}
