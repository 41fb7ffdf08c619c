#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieindex/json_io.hpp"

using namespace lieindex;

TEST_SUITE_BEGIN("json");

TEST_CASE("root system document round-trips and re-serializes identically") {
  for (const char* name : {"A2", "B3", "D4", "G2"}) {
    RootSystem rs = build_root_system(name[0], name[1] - '0');
    json j = root_system_to_json(rs);
    RootSystem back = root_system_from_json(j);
    json j2 = root_system_to_json(back);
    CHECK(j == j2);
    CHECK(j.dump() == j2.dump());
  }
}

TEST_CASE("root system document validation rejects tampering") {
  RootSystem rs = build_root_system('A', 2);
  json j = root_system_to_json(rs);
  json bad = j;
  bad["cartan"][0][1] = -2;
  CHECK_THROWS_AS(root_system_from_json(bad), std::invalid_argument);
  bad = j;
  bad["positive_roots"].erase(0);
  CHECK_THROWS_AS(root_system_from_json(bad), std::invalid_argument);
  bad = j;
  bad["family"] = "Q";
  CHECK_THROWS_AS(root_system_from_json(bad), std::invalid_argument);
}

TEST_CASE("cascade forest: D4 shape with 1-based subsets") {
  RootSystem d4 = build_root_system('D', 4);
  json forest = cascade_to_json(d4.cascade());
  REQUIRE(forest.size() == 1);  // Pi is connected: one tree
  const json& top = forest[0];
  CHECK(top["subset"] == json::array({1, 2, 3, 4}));
  CHECK(top["epsilon"] == json::array({1, 2, 1, 1}));
  CHECK(top["gamma"].size() == 9);
  REQUIRE(top["children"].size() == 3);
  CHECK(top["children"][0]["subset"] == json::array({1}));
  CHECK(top["children"][1]["subset"] == json::array({3}));
  CHECK(top["children"][2]["subset"] == json::array({4}));
  for (const json& ch : top["children"]) CHECK(ch["children"].empty());
}

TEST_CASE("form coordinates: p/q strings both ways") {
  LieAlgebra L = build_algebra('A', 1);
  Subalgebra b = borel(L);
  LinearForm f{&b, {rat(-3, 7), rat(4)}, "t"};
  json j = form_to_json(f);
  CHECK(j == json::array({"-3/7", "4"}));
  QVec back = coords_from_json(j);
  CHECK(back == f.coords);
  // integers are accepted as plain JSON numbers too
  CHECK(coords_from_json(json::array({1, "2/3"})) == QVec{rat(1), rat(2, 3)});
  CHECK_THROWS_AS(coords_from_json(json::parse("[\"1/0\"]")), std::invalid_argument);
  CHECK_THROWS_AS(coords_from_json(json::parse("{}")), std::invalid_argument);
}

TEST_CASE("bracket table triples: sl2 frozen content") {
  LieAlgebra L = build_algebra('A', 1);
  json t = bracket_table_to_json(L);
  // nonzero cells: (H,X), (H,Y), (X,H), (Y,H), (X,Y), (Y,X)
  CHECK(t.size() == 6);
  bool found_hx = false, found_xy = false;
  for (const json& e : t) {
    if (e[0] == 0 && e[1] == 1) {
      found_hx = true;
      CHECK(e[2] == json::array({json::array({1, 2, 1})}));  // [H,X] = 2X
    }
    if (e[0] == 1 && e[1] == 2) {
      found_xy = true;
      CHECK(e[2] == json::array({json::array({0, 1, 1})}));  // [X,Y] = H
    }
  }
  CHECK(found_hx);
  CHECK(found_xy);
}

TEST_CASE("index result and report documents carry the pinned keys") {
  LieAlgebra L = build_algebra('D', 4);
  Subalgebra p = parabolic(L, {1});
  json j = index_result_to_json(p, 1, 3, 0, 16, "max-sampled");
  CHECK(j["subalgebra"]["type"] == "D");
  CHECK(j["subalgebra"]["rank"] == 4);
  CHECK(j["subalgebra"]["parabolic_subset"] == json::array({2}));
  CHECK(j["dim"] == 17);
  CHECK(j["index"] == 1);
  CHECK(j["trials"] == 3);
  CHECK(j["seed"] == 0);

  Subalgebra b = borel(L);
  LinearForm f = form_from_element(b, cascade_element(L));
  json r = stability_report_to_json(is_stable(b, f));
  CHECK(r["stable"] == true);
  CHECK(r["dim_intersection"] == 0);
  CHECK(r.contains("verdict"));

  D4Scenario s = build_scenario();
  json c = counterexample_report_to_json(run_counterexample_one(s, rat(1)));
  CHECK(c["lambda"] == "1");
  CHECK(c["dim_pf"] == 1);
  CHECK(c["stable"] == false);
  CHECK(c["ok"] == true);
  CHECK(c["support"].size() == 8);
}

TEST_CASE("serialization is deterministic across repeated runs") {
  RootSystem a = build_root_system('F', 4);
  RootSystem b = build_root_system('F', 4);
  CHECK(root_system_to_json(a).dump() == root_system_to_json(b).dump());
  CHECK(cascade_to_json(a.cascade()).dump() == cascade_to_json(b.cascade()).dump());
}

TEST_SUITE_END();
