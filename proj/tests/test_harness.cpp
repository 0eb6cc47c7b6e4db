#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "strata/parse.hpp"
#include "strata/report.hpp"

using namespace strata;
using namespace strata::cli;

namespace {
std::string write_temp(const std::string& name, const std::string& contents) {
    std::string path = "/tmp/strata_test_" + name;
    std::ofstream out(path);
    out << contents;
    return path;
}
}  // namespace

TEST_CASE("ideal file parsing") {
    SUBCASE("one generator per line") {
        auto I = parse_ideal_file(write_temp("pair.ideal", "x\ny\n"));
        REQUIRE(I.gens().size() == 2);
        CHECK(I.colength() == 1);
    }
    SUBCASE("grammar with comments") {
        auto I = parse_ideal_file(write_temp("tangent.ideal", "# comment\ny - x^2\nx^3\n"));
        CHECK(I.colength() == 3);
    }
    SUBCASE("syntax error reports the line") {
        auto path = write_temp("bad.ideal", "x ++ y\n");
        try {
            parse_ideal_file(path);
            FAIL("expected parse error");
        } catch (const parse_error& e) {
            CHECK(e.line == 1);
        }
    }
    SUBCASE("empty file is an error") {
        CHECK_THROWS_AS(parse_ideal_file(write_temp("empty.ideal", "# nothing\n")), math_error);
    }
    SUBCASE("missing file is an error") {
        CHECK_THROWS_AS(parse_ideal_file("/tmp/strata_no_such_file.ideal"), math_error);
    }
}

TEST_CASE("report serialization") {
    Report r;
    r.config = nlohmann::ordered_json{{"suite", "demo"}};
    SUBCASE("empty report") {
        auto j = r.to_json();
        CHECK(j["checks"].is_array());
        CHECK(j["checks"].empty());
        CHECK(j["summary"]["fail"] == 0);
    }
    SUBCASE("statuses preserved and exact rationals stay text") {
        r.pass("alpha", "1", "1");
        r.fail("beta", "0", "3/2", "witness 3/2");
        r.skip("gamma", "skipped");
        auto j = r.to_json();
        CHECK(j["checks"][0]["status"] == "pass");
        CHECK(j["checks"][1]["status"] == "fail");
        CHECK(j["checks"][1]["actual"] == "3/2");
        CHECK(j["checks"][2]["status"] == "skip");
        CHECK(r.exit_code() == 1);
        CHECK(r.count("pass") == 1);
    }
    SUBCASE("durations are the only stripped fields") {
        r.pass("alpha", "1", "1", 12.5);
        auto with = r.to_json(true), without = r.to_json(false);
        CHECK(with["checks"][0].contains("duration_ms"));
        CHECK(!without["checks"][0].contains("duration_ms"));
    }
}

TEST_CASE("emit_report writes stable JSON") {
    Report r;
    r.config = nlohmann::ordered_json{{"suite", "demo"}};
    r.pass("alpha", "", "");
    std::string path = "/tmp/strata_test_report.json";
    emit_report(r, path);
    std::ifstream in(path);
    nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j["tool"] == "strata");
    CHECK(j["checks"].size() == 1);
    CHECK_THROWS(emit_report(r, "/nonexistent-dir/report.json"));
    std::remove(path.c_str());
}

TEST_CASE("suites are deterministic given the seed") {
    SuiteConfig cfg;
    cfg.suite = "poisson";
    cfg.seed = 7;
    Report a = run_suite(cfg), b = run_suite(cfg);
    CHECK(a.to_json(false) == b.to_json(false));
    CHECK(a.exit_code() == 0);
}

TEST_CASE("unknown suite is a usage error") {
    SuiteConfig cfg;
    cfg.suite = "bogus";
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
}

TEST_CASE("prime-field mode runs the uni suite") {
    SuiteConfig cfg;
    cfg.suite = "uni";
    cfg.shape = {2, 1};
    cfg.samples = 20;
    cfg.field = Field::prime(1000003);
    Report r = run_suite(cfg);
    CHECK(r.exit_code() == 0);
}
