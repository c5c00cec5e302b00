#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "onepoint/cli.hpp"
#include "onepoint/demo.hpp"
#include "onepoint/io.hpp"

using namespace onepoint;
using namespace onepoint::testing;

TEST_CASE("problem serialization round trip") {
  for (const auto& name :
       {"ribbon", "monotone", "hurwitz", "double-bms(3,1,0,1/2)"}) {
    ProblemSpec p = catalog(name);
    ProblemSpec back = problem_from_json(json_of(p));
    CHECK(back.G == p.G);
    CHECK(back.q == p.q);
    CHECK(back.name == p.name);
    CHECK(back.stride == p.stride);
  }
  Json j = Json::parse(
      R"({"G":{"kind":"rational","num":["1","1"],"den":["1"]},"q":["0","1"]})");
  ProblemSpec p = problem_from_json(j);
  CHECK(p.G.num == pq({1, 1}));
  CHECK(p.q.at(2) == 1);
}

TEST_CASE("table serialization round trip") {
  InvariantTable t = invariants(catalog("monotone"), 5, 2);
  InvariantTable back = table_from_json(json_of(t));
  CHECK(back.d_max == t.d_max);
  for (long d = 1; d <= 5; ++d)
    for (long g = 0; g <= 2; ++g) CHECK(back.at(g, d) == t.at(g, d));
}

TEST_CASE("recurrence and relation round trips") {
  ClosureDemo demo = closure_demo_monotone();
  PRecurrence rec = normalize_recurrence(demo.final_rec);
  PRecurrence back = recurrence_from_json(json_of(rec));
  CHECK(back.coeffs == rec.coeffs);
  CHECK(back.offset == rec.offset);
  CHECK(back.valid_from == rec.valid_from);
  REQUIRE(back.initial.size() == rec.initial.size());
  for (size_t i = 0; i < rec.initial.size(); ++i)
    CHECK(back.initial[i] == rec.initial[i]);

  HLevelRelation rel = demo.relation;
  HLevelRelation rback = relation_from_json(json_of(rel));
  CHECK(rback.coeffs == rel.coeffs);

  GDRecursion gd = demo.gd[0];
  GDRecursion gback = gd_from_json(json_of(gd));
  CHECK(gback == gd);
}

TEST_CASE("factored polynomial display") {
  CHECK(pretty_poly_factored(pq({-6, 4}), "d") == "2(2d-3)");
  CHECK(pretty_poly_factored(pq({0, 1, -2, 1}), "d") == "d(d-1)^2");
  CHECK(pretty_poly_factored(pq({1, 1}), "d") == "(d+1)");
  CHECK(pretty_poly_factored(pq({2, -8, 9}), "d") == "(9d^2-8d+2)");
  CHECK(pretty_poly_factored(pq({0, 0, 3}), "d") == "3d^2");
  CHECK(pretty_poly_factored(pq({5}), "d") == "5");
  CHECK(pretty_poly_factored(PolyQ(), "d") == "0");
}

TEST_CASE("pretty recursions mirror the published typography") {
  auto cat = catalog_recursions();
  CHECK(pretty_gd(cat[4].rec, "m") ==
        "d m_g(d) = 2(2d-3) m_g(d-1) + d(d-1)^2 m_{g-1}(d)");
  CHECK(pretty_gd(cat[0].rec, "a") ==
        "(d+1) a_g(d) = 2(2d-1) a_g(d-1) + (2d-1)(d-1)(2d-3) a_{g-1}(d-2)");
  CHECK(pretty_gd(cat[1].rec, "b") ==
        "(d+1) b_g(d) = 2(2d-1) b_g(d-1) + (d-1)^2(d-2) b_{g-1}(d-2)");
}

TEST_CASE("run is deterministic and matches figure rows") {
  RunConfig cfg;
  cfg.command = "invariants";
  cfg.problem = "monotone";
  cfg.d_max = 5;
  cfg.g_max = 2;
  cfg.format = "table";
  RunResult a = run(cfg), b = run(cfg);
  CHECK(a.status == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("3 2 42") != std::string::npos);
  CHECK(a.output.find("5 2 8778") != std::string::npos);

  cfg.format = "json";
  RunResult j = run(cfg);
  Json parsed = Json::parse(j.output);
  CHECK(parsed.at("entries").size() == 15);
}

TEST_CASE("oracle and closure-demo through the CLI layer") {
  RunConfig cfg;
  cfg.command = "oracle";
  cfg.oracle_kind = "ribbon";
  cfg.oracle_d = 3;
  cfg.format = "table";
  RunResult res = run(cfg);
  CHECK(res.output.find("0 5") != std::string::npos);
  CHECK(res.output.find("1 10") != std::string::npos);

  cfg.command = "closure-demo";
  cfg.demo = "monotone";
  RunResult demo = run(cfg);
  CHECK(demo.output.find(
            "d m_g(d) = 2(2d-3) m_g(d-1) + d(d-1)^2 m_{g-1}(d)") !=
        std::string::npos);

  cfg.demo = "unknown";
  CHECK_THROWS_AS(run(cfg), Error);
}

TEST_CASE("guess and verify through the CLI layer") {
  RunConfig cfg;
  cfg.command = "guess";
  cfg.problem = "monotone";
  cfg.order = 1;
  cfg.degree = 3;
  cfg.n = 20;
  cfg.format = "pretty";
  RunResult res = run(cfg);
  CHECK(res.output.find("d m_g(d) = 2(2d-3) m_g(d-1) + d(d-1)^2 m_{g-1}(d)") !=
        std::string::npos);

  // Write the monotone catalog recursion to a file and verify it.
  std::string path = "/tmp/onepoint_test_rec.json";
  {
    std::ofstream out(path);
    out << json_of(catalog_recursions()[4].rec).dump();
  }
  cfg = RunConfig{};
  cfg.command = "verify";
  cfg.problem = "monotone";
  cfg.recursion_file = path;
  cfg.d_max = 18;
  cfg.format = "json";
  RunResult ver = run(cfg);
  Json parsed = Json::parse(ver.output);
  CHECK(parsed.at("holds").get<bool>());
  std::remove(path.c_str());
}

TEST_CASE("bad configurations surface module-tagged errors") {
  RunConfig cfg;
  cfg.command = "invariants";
  cfg.problem = "not-a-problem";
  try {
    run(cfg);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "generator/unknown-problem");
  }
  cfg.command = "nonsense";
  cfg.problem = "monotone";
  CHECK_THROWS_AS(run(cfg), Error);
  cfg.command = "oracle";
  cfg.oracle_kind = "ribbon";
  cfg.oracle_d = 9;
  try {
    run(cfg);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "oracle/out-of-range");
  }
}
