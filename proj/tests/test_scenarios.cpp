#include "doctest.h"
#include "insep/paper_suite.hpp"

using namespace insep;

TEST_CASE("scenario JSON round trip for the reference surface") {
    Json j = Json::parse(R"({
        "characteristic": 2, "k": 1,
        "curve_C": {"type": "artin_schreier", "h": 4},
        "curve_F": {"type": "p1"},
        "vf_C": {"catalog": "as_ddx", "h": 4},
        "vf_F": {"catalog": "delta1"},
        "options": {"zeta": true}
    })");
    Scenario s = parse_scenario(j);
    RunResult r = run_scenario(s);
    CHECK(r.exit_code == 0);
    CHECK(r.json.at(Json::json_pointer("/invariants/K2_resolved/value")).get<int>() == 14);
    CHECK(r.json.at(Json::json_pointer("/invariants/chi/value")).get<int>() == 1);
    CHECK(r.json.at(Json::json_pointer("/zeta/P2_product")) == Json::array({1, -4, 4}));
}

TEST_CASE("characteristic other than 2 is rejected") {
    Json j = Json::parse(R"({"characteristic": 3, "k": 1,
        "curve_C": {"type": "p1"}, "curve_F": {"type": "p1"},
        "vf_C": {"catalog": "delta1"}, "vf_F": {"catalog": "delta1"}})");
    CHECK_THROWS_AS(parse_scenario(j), ValidationError);
}

TEST_CASE("vector field on the wrong curve is rejected") {
    Json j = Json::parse(R"({"characteristic": 2, "k": 1,
        "curve_C": {"type": "artin_schreier", "h": 3}, "curve_F": {"type": "p1"},
        "vf_C": {"catalog": "delta1"}, "vf_F": {"catalog": "delta1"}})");
    CHECK_THROWS_AS(parse_scenario(j), ValidationError);
}

TEST_CASE("pullback fields parse from coefficient arrays") {
    Json j = Json::parse(R"({
        "characteristic": 2, "k": 1,
        "curve_C": {"type": "artin_schreier", "h": 4},
        "curve_F": {"type": "p1"},
        "vf_C": {"base": "ddx", "scale_num": [1], "scale_den": [0, 0, 1]},
        "vf_F": {"catalog": "delta2"}
    })");
    Scenario s = parse_scenario(j);
    CHECK(s.vf_C.pole_degree() == 4);
    RunResult r = run_scenario(s);
    CHECK(r.exit_code == 0);
}

TEST_CASE("reports are byte-identical across runs") {
    for (auto& id : {std::string("bmy"), std::string("minustwo_d4"), std::string("picard_family(2,8)")}) {
        RunResult a = run_scenario(named_scenario(id));
        RunResult b = run_scenario(named_scenario(id));
        CHECK(a.json.dump() == b.json.dump());
        CHECK(a.human == b.human);
    }
}

TEST_CASE("the genus-4 variant exits through the partial-report path") {
    RunResult r = run_scenario(named_scenario("bmy_genus4"));
    CHECK(r.exit_code == 3);
    CHECK(r.json.at(Json::json_pointer("/unclassified")) == Json::array({6, 4}));
    CHECK(r.json.at(Json::json_pointer("/invariants/K2_singular/value")).get<int>() == 24);
    CHECK(r.json.at(Json::json_pointer("/singularities/0/type")).get<std::string>() == "unclassified(6,4)");
}

TEST_CASE("every report field of the reference scenarios carries a provenance tag") {
    RunResult r = run_scenario(named_scenario("minustwo_d8"));
    for (auto& [key, val] : r.json.at("invariants").items()) {
        (void)key;
        CHECK(val.contains("by"));
        CHECK(val.contains("status"));
    }
}

TEST_CASE("the full reference suite is green") {
    auto lines = run_paper_suite();
    CHECK(lines.size() == all_named_scenarios().size());
    for (auto& l : lines) {
        INFO(l.scenario);
        for (auto& d : l.diffs) INFO(d);
        CHECK(l.pass);
    }
}

TEST_CASE("albanese and picard identifiers expand to the same data") {
    RunResult a = run_scenario(named_scenario("picard_family(2,8)"));
    RunResult b = run_scenario(named_scenario("albanese_family(2,8)"));
    CHECK(a.json.at("invariants") == b.json.at("invariants"));
}

TEST_CASE("unknown scenario identifiers are rejected") {
    CHECK_THROWS_AS(named_scenario("nonsense"), ValidationError);
    CHECK_THROWS_AS(named_scenario("picard_family(2)"), ValidationError);
}
