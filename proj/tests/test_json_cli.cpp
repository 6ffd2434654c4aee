#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "braceforge/errors.hpp"
#include "braceforge/json_io.hpp"
#include "braceforge/verify.hpp"

using namespace braceforge;

TEST_CASE("group json round trip") {
  FiniteGroup d8 = make_dihedral(8);
  json j = group_to_json(d8);
  FiniteGroup back = group_from_json(j);
  CHECK(back.table == d8.table);
  CHECK(back.labels == d8.labels);

  json bad = j;
  bad["order"] = 9;
  CHECK_THROWS_AS(group_from_json(bad), InvalidArgumentError);
}

TEST_CASE("brace json round trip") {
  const SkewBrace& wtd8 = catalog_brace("wt-d8");
  json j = brace_to_json(wtd8);
  SkewBrace back = brace_from_json(j);
  CHECK(back.add.table == wtd8.add.table);
  CHECK(back.circ.table == wtd8.circ.table);

  // malformed circ table fails validation
  json bad = j;
  bad["circ"][0][1] = 0;
  CHECK_THROWS_AS(brace_from_json(bad), AxiomError);
}

TEST_CASE("builder expressions") {
  CHECK(construct_brace("triv:D8").order() == 8);
  CHECK(construct_brace("optriv:s3").order() == 6);
  CHECK(construct_brace("triple:c5c4,c5c4,id").order() == 100);
  CHECK(construct_brace("triple:d8,d8,id").order() == 16);
  CHECK(construct_brace("prod:triv:c2|optriv:s3").order() == 12);
  CHECK(construct_brace("sd:c2-c3").order() == 6);
  CHECK(construct_brace("ef:d6").order() == 6);
  CHECK(construct_brace("wt100").order() == 100);

  CHECK_THROWS_AS(construct_brace("nonsense:thing"), InvalidArgumentError);
  CHECK_THROWS_AS(construct_brace("triple:c5c4,c5c4,swap"), InvalidArgumentError);
  CHECK_THROWS_AS(construct_brace("triv:c9999"), CapacityError);
}

TEST_CASE("brace file round trip through disk") {
  std::string path = "braceforge_test_tmp.json";
  write_text_file(path, brace_to_json(catalog_brace("ef:d8")).dump(2));
  SkewBrace loaded = load_brace(path);
  CHECK(loaded.order() == 8);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_brace("no/such/file.json"), Error);
}

TEST_CASE("analysis report fields and determinism") {
  json wt = analysis_report("wt100", catalog_brace("wt100"));
  CHECK(wt["schema"] == 1);
  CHECK(wt["order"] == 100);
  CHECK(wt["two_sided"] == true);
  CHECK(wt["weakly_trivial"] == true);
  CHECK(wt["isomorphic_add_mult"] == false);
  CHECK(wt["additive_group"]["derived_length"] == 2);
  CHECK(wt["multiplicative_group"]["derived_length"] == 2);

  json again = analysis_report("wt100", catalog_brace("wt100"));
  CHECK(wt.dump(2) == again.dump(2));

  json t5 = analysis_report("triv:c5", catalog_brace("triv:c5"));
  CHECK(t5["primeness"]["semiprime"] == false);

  json sd = analysis_report("sd:c2-c3", catalog_brace("sd:c2-c3"));
  CHECK(sd["two_sided"] == false);
  CHECK(sd["left_nilpotent"] == false);
  CHECK(sd["right_nilpotent"] == true);

  json witnessed =
      analysis_report("sd:c2-c3", catalog_brace("sd:c2-c3"), true);
  CHECK(witnessed["witnesses"]["two_sided"].is_array());
}

TEST_CASE("solution export shape") {
  SetSolution s = solution_from_brace(catalog_brace("triv:c4"));
  json j = solution_to_json(s);
  CHECK(j["size"] == 4);
  CHECK(j["r"].size() == 16);
  CHECK(j["r"][1][0] == 1);  // r(0,1) = (1, 0) in the trivial abelian brace
  CHECK(j["r"][1][1] == 0);
}

TEST_CASE("primeness report shape") {
  json j = primeness_report(catalog_brace("optriv:d8"), true);
  CHECK(j["semiprime"] == false);
  CHECK(j["strongly_semiprime"] == false);
  CHECK(j["witness"]["semiprime"].is_array());
  CHECK(j["witness"]["strongly_semiprime"].contains("left"));
}

TEST_CASE("catalog basics") {
  CHECK(catalog().size() >= 30);
  int min_order = 1 << 30, max_order = 0;
  for (const auto& nb : catalog()) {
    min_order = std::min(min_order, nb.brace.order());
    max_order = std::max(max_order, nb.brace.order());
  }
  CHECK(min_order == 1);
  CHECK(max_order == 100);
  auto names = catalog_names();
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(catalog_has("wt100"));
  CHECK(catalog_has("wt-d8"));
  CHECK(catalog_has("sd:c2-c3"));
}

TEST_CASE("verify registry") {
  CHECK(suite_registry().size() >= 30);
  std::vector<SuiteResult> results;
  VerifySummary s = run_suites("lemma:distributivity", "triv:c", results);
  CHECK(s.failed == 0);
  CHECK(s.passed > 0);
  CHECK_THROWS_AS(run_suites("lemma:no-such-thing", "", results),
                  InvalidArgumentError);

  std::vector<SuiteResult> sd_results;
  VerifySummary s2 = run_suites("theorem:strong-primeness-equivalence",
                                "sd:c2-c3", sd_results);
  CHECK(s2.failed == 0);
  REQUIRE(sd_results.size() == 1);
  CHECK(sd_results[0].status == "skip");
  CHECK(sd_results[0].detail.find("out of hypothesis") != std::string::npos);
}
