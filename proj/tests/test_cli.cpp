#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "session.hpp"

using namespace lgt;

TEST_CASE("empty suite list runs to an empty passing report") {
    Json cfg = Json{{"seed", 1}, {"objects", Json::array()}, {"suites", Json::array()}};
    Session s(cfg);
    auto results = s.run();
    CHECK(results.empty());
    CHECK(s.all_asserted_pass());
    CHECK(s.report_json()["suites"].empty());
}

TEST_CASE("config parsing: factors, rationals, defaults") {
    CHECK(parse_rat(Json(3)) == Rat(3));
    CHECK(parse_rat(Json("7/2")) == Rat(7, 2));
    Factor f = parse_factor(Json::array({"CYCLE", 6}));
    CHECK(f.kind == FactorKind::CYCLE);
    CHECK(f.size == 6);
    CHECK_THROWS_AS(parse_factor(Json::array({"TRIANGLE", 3})), ConfigError);
}

TEST_CASE("mismatched group signatures across a morphism raise ConfigError") {
    Json cfg = Json::parse(R"({
      "seed": 1,
      "objects": [
        {"id": "a", "factors": [["TIME",4],["CYCLE",5]], "margin": 1, "group": {"k":1,"l":0}},
        {"id": "b", "factors": [["TIME",6],["CYCLE",5]], "margin": 1, "group": {"k":0,"l":1}}
      ],
      "morphisms": [{"id": "f", "source": "a", "target": "b", "offsets": [1,0]}],
      "suites": []
    })");
    CHECK_THROWS_AS(Session{cfg}, ConfigError);
}

TEST_CASE("unknown object references fail the referencing suite") {
    Json cfg = Json::parse(R"({
      "seed": 1,
      "objects": [],
      "suites": [{"suite": "einv", "object": "missing"}]
    })");
    Session s(cfg);
    auto results = s.run();
    REQUIRE(results.size() == 1);
    CHECK_FALSE(results[0].pass);
    CHECK_FALSE(s.all_asserted_pass());
    CHECK(results[0].report["error"].get<std::string>().find("missing") != std::string::npos);
}

TEST_CASE("reports are deterministic and carry the seed") {
    Json cfg = Json::parse(R"({
      "seed": 42,
      "objects": [
        {"id": "a", "factors": [["TIME",5],["CYCLE",5]], "margin": 1, "group": {"k":1,"l":0}}
      ],
      "suites": [{"suite": "einv", "object": "a"},
                 {"suite": "green", "object": "a", "samples": 5}]
    })");
    Session s1(cfg), s2(cfg);
    s1.run();
    s2.run();
    CHECK(s1.seed() == 42);
    CHECK(s1.report_json().dump() == s2.report_json().dump());
    CHECK(s1.report_csv() == s2.report_csv());
    CHECK(s1.all_asserted_pass());
    // CSV schema: fixed header, rational values as p/q strings
    std::string csv = s1.report_csv();
    CHECK(csv.rfind("suite,object,quantity,value,status", 0) == 0);
}

TEST_CASE("negative controls are reported but never gate the outcome") {
    Json cfg = Json::parse(R"({
      "seed": 7,
      "objects": [
        {"id": "blk",  "factors": [["TIME",4],["PATH",4]],   "margin": 1, "group": {"k":1,"l":0}},
        {"id": "caus", "factors": [["TIME",8],["CYCLE",16]], "margin": 1, "group": {"k":1,"l":0}}
      ],
      "morphisms": [
        {"id": "f1", "source": "blk", "target": "caus", "offsets": [2,0]},
        {"id": "f2", "source": "blk", "target": "caus", "offsets": [2,8]},
        {"id": "f3", "source": "blk", "target": "caus", "offsets": [2,1]}
      ],
      "suites": [{"suite": "causality", "first": "f1", "second": "f2", "control": "f3"}]
    })");
    Session s(cfg);
    auto results = s.run();
    REQUIRE(results.size() == 1);
    CHECK(results[0].pass);
    bool saw_control = false;
    for (auto& row : results[0].csv)
        if (row.status == "control") saw_control = true;
    CHECK(saw_control);
}
