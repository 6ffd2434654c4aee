#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "braceforge/catalog.hpp"
#include "braceforge/errors.hpp"
#include "braceforge/structure.hpp"

using namespace braceforge;

TEST_CASE("weak triviality") {
  CHECK(is_weakly_trivial(trivial_brace(make_dihedral(8))));
  CHECK(is_weakly_trivial(almost_trivial(make_dihedral(8))));
  CHECK(is_weakly_trivial(catalog_brace("wt100")));
  CHECK(is_weakly_trivial(catalog_brace("wt-d8")));
  CHECK(!is_weakly_trivial(catalog_brace("sd:c2-c3")));
}

TEST_CASE("weakly trivial quotient") {
  const SkewBrace& wtd8 = catalog_brace("wt-d8");
  BraceWithProjection q = weakly_trivial_quotient(wtd8);
  CHECK(q.brace.order() == 16);

  const SkewBrace& sd = catalog_brace("sd:c2-c3");
  BraceWithProjection q2 = weakly_trivial_quotient(sd);
  CHECK(q2.brace.order() == 2);
  CHECK(is_weakly_trivial(q2.brace));
}

TEST_CASE("subdirect embedding") {
  const SkewBrace& wt100 = catalog_brace("wt100");
  SubdirectEmbedding emb = subdirect_embedding(wt100);
  CHECK(emb.product.order() == 400);
  CHECK(emb.q1.brace.order() == 20);
  CHECK(emb.q2.brace.order() == 20);
  std::set<int> image(emb.embedding.map.begin(), emb.embedding.map.end());
  CHECK(image.size() == 100);

  CHECK_THROWS_AS(subdirect_embedding(catalog_brace("sd:c2-c3")),
                  PreconditionError);
}

TEST_CASE("pullback over the trivial brace is the direct product") {
  SkewBrace a = trivial_brace(make_cyclic(2));
  SkewBrace b = almost_trivial(make_dihedral(6));
  SkewBrace c = trivial_brace(make_cyclic(1));
  BraceMorphism f = make_brace_morphism(a, c, {0, 0});
  BraceMorphism g = make_brace_morphism(b, c, std::vector<int>(6, 0));
  Pullback pb = pullback(a, b, c, f, g);
  CHECK(pb.brace.order() == 12);
  CHECK(pb.brace.add.table == direct_product(a, b).add.table);
}

TEST_CASE("goursat decomposition") {
  SkewBrace a = trivial_brace(make_cyclic(4));

  // full product
  GoursatDatum full = goursat_decompose(a, a, ElementSet::full(16));
  CHECK(full.i == ElementSet::full(4));
  CHECK(full.j == ElementSet::full(4));
  CHECK(full.a_quot.brace.order() == 1);
  CHECK(goursat_subset(a, a, full) == ElementSet::full(16));

  // diagonal
  ElementSet diag(16);
  for (int x = 0; x < 4; ++x) diag.insert(x * 4 + x);
  GoursatDatum d = goursat_decompose(a, a, diag);
  CHECK(d.i == ElementSet::of(4, {0}));
  CHECK(d.j == ElementSet::of(4, {0}));
  for (int x = 0; x < 4; ++x) CHECK(d.rho(d.a_quot.projection(x)) == d.b_quot.projection(x));
  CHECK(goursat_subset(a, a, d) == diag);

  CHECK_THROWS_AS(goursat_decompose(a, a, ElementSet::of(16, {0})),
                  PreconditionError);
}

TEST_CASE("triple to brace") {
  FiniteGroup c4 = make_cyclic(4);
  TripleBrace diag = triple_to_brace(make_triple_id(c4, c4));
  CHECK(diag.brace.order() == 4);
  CHECK(find_brace_isomorphism(diag.brace, trivial_brace(c4)).has_value());

  TripleBrace wt100 = triple_to_brace(
      make_triple_id(make_presented_c5_c4(), make_presented_c5_c4()));
  CHECK(wt100.brace.order() == 100);

  TripleBrace wtd8 = triple_to_brace(make_triple_id(make_dihedral(8), make_dihedral(8)));
  CHECK(wtd8.brace.order() == 16);
  // members are exactly the pairs congruent modulo the derived subgroup
  GroupWithProjection ab = abelianization(make_dihedral(8));
  for (int i = 0; i < 16; ++i) {
    int g = wtd8.to_triv_g(i);
    int h = wtd8.to_optriv_h(i);
    CHECK(ab.projection(g) == ab.projection(h));
  }
}

TEST_CASE("brace to triple") {
  Triple t = brace_to_triple(trivial_brace(make_dihedral(6)));
  CHECK(t.g.order == 6);
  CHECK(t.h.order == 2);

  Triple wt = brace_to_triple(catalog_brace("wt100"));
  CHECK(wt.g.order == 20);
  CHECK(wt.h.order == 20);
  CHECK(find_isomorphism(wt.g, make_presented_c5_c4()).has_value());
  CHECK(find_isomorphism(wt.h, make_presented_c5_c4()).has_value());

  CHECK_THROWS_AS(brace_to_triple(catalog_brace("sd:c2-c3")), PreconditionError);
}

TEST_CASE("triple round trip on small braces") {
  for (const char* name : {"triv:s3", "optriv:d8", "wt-d8", "ef:d6"}) {
    const SkewBrace& a = catalog_brace(name);
    if (!is_weakly_trivial(a)) continue;
    TripleBrace back = triple_to_brace(brace_to_triple(a));
    CHECK(back.brace.order() == a.order());
    CHECK(find_brace_isomorphism(a, back.brace).has_value());
  }
}

TEST_CASE("triple equivalence") {
  FiniteGroup c4 = make_cyclic(4);
  Triple t1 = make_triple_id(c4, c4);
  CHECK(triples_equivalent(t1, t1));

  Triple t2 = make_triple(c4, c4, {0, 3, 2, 1});
  CHECK(triples_equivalent(t1, t2));

  Triple big = make_triple_id(make_presented_c5_c4(), make_presented_c5_c4());
  CHECK(!triples_equivalent(t1, big));

  Triple huge = make_triple_id(make_cyclic(250), make_cyclic(250));
  CHECK_THROWS_AS(triples_equivalent(huge, huge), CapacityError);
}

TEST_CASE("series of trivial braces") {
  SkewBrace t = trivial_brace(make_cyclic(5));
  for (SeriesKind k : {SeriesKind::left, SeriesKind::right, SeriesKind::strong,
                       SeriesKind::derived}) {
    SeriesReport r = series(t, k);
    CHECK(r.stabilized);
    CHECK(r.reaches_zero);
    CHECK(r.length == 1);
    CHECK(r.terms.size() == 2);
    CHECK(r.terms[0] == ElementSet::full(5));
  }

  SkewBrace one = trivial_brace(make_cyclic(1));
  SeriesReport r1 = series(one, SeriesKind::derived);
  CHECK(r1.reaches_zero);
  CHECK(r1.length == 0);
}

TEST_CASE("series of almost trivial braces track the group") {
  FiniteGroup d8 = make_dihedral(8);
  SkewBrace at = almost_trivial(d8);
  SeriesReport right = series(at, SeriesKind::right);
  CHECK(right.terms == lower_central_series(d8));
  CHECK(right.reaches_zero);
  CHECK(right.length == 2);

  SkewBrace at5 = almost_trivial(make_alternating(5));
  SeriesReport r5 = series(at5, SeriesKind::right);
  CHECK(!r5.reaches_zero);
  CHECK(r5.length == 0);
}

TEST_CASE("nilpotency and solubility predicates") {
  SkewBrace t = trivial_brace(make_dihedral(8));
  CHECK(is_left_nilpotent(t));
  CHECK(is_right_nilpotent(t));
  CHECK(is_strongly_nilpotent(t));
  CHECK(is_soluble(t));

  SkewBrace at6 = almost_trivial(make_dihedral(6));
  CHECK(!is_left_nilpotent(at6));
  CHECK(is_soluble(at6));

  const SkewBrace& sd = catalog_brace("sd:c2-c3");
  CHECK(!is_left_nilpotent(sd));
  CHECK(is_right_nilpotent(sd));
  CHECK(!is_strongly_nilpotent(sd));
  CHECK(is_soluble(sd));
}

TEST_CASE("simple two-sided classification") {
  CHECK(classify_simple_two_sided(trivial_brace(make_cyclic(5))) ==
        SimpleTwoSidedClass::trivial_of_simple);
  CHECK(classify_simple_two_sided(trivial_brace(make_cyclic(7))) ==
        SimpleTwoSidedClass::trivial_of_simple);
  CHECK(classify_simple_two_sided(almost_trivial(make_alternating(5))) ==
        SimpleTwoSidedClass::almost_trivial_of_simple);
  CHECK_THROWS_AS(classify_simple_two_sided(trivial_brace(make_cyclic(4))),
                  PreconditionError);
}

TEST_CASE("sub skew brace enumeration") {
  SkewBrace c4 = trivial_brace(make_cyclic(4));
  CHECK(sub_skew_braces(c4).size() == 3);

  const SkewBrace& sd = catalog_brace("sd:c2-c3");
  auto subs = sub_skew_braces(sd);
  CHECK(subs.size() >= 3);
  for (const auto& s : subs) CHECK(s.contains(0));
}
