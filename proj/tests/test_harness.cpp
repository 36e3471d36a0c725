#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lipact/suites.hpp"

using namespace lipact;

TEST_CASE("config parsing") {
    Config c = parse_config("# comment\n\n  radius = 4 \nseed=99\nfamilies = a,ab\n");
    CHECK(c.radius == 4);
    CHECK(c.seed == 99);
    CHECK(c.families == "a,ab");
    CHECK(c.mode == "exact");   // defaults survive
    auto fams = c.family_list();
    REQUIRE(fams.size() == 2);
    CHECK(fams[0] == "a");
    CHECK(fams[1] == "ab");
    CHECK(c.epsilon_rat() == Rat(1, 2));
}

TEST_CASE("config errors carry line numbers") {
    try {
        parse_config("radius = 3\nbogus_key = 1\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config("radius 3\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("radius = x\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("radius = -1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("mode = turbo\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("profile = tripod\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("epsilon = 1/0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("grid_max = 100\nj_cap = 50\n"), ConfigError);
    CHECK_THROWS(load_config("/nonexistent/path.cfg"));
}

TEST_CASE("cell formatting") {
    CHECK(fmt(Rat(1, 3)) == "1/3");
    CHECK(fmt(Rat(-2)) == "-2");
    CHECK(fmt(long(42)) == "42");
    CHECK(fmt(0.5) == "0.5");
    CHECK(fmt(1.0 / 3.0).substr(0, 4) == "0.33");
}

TEST_CASE("csv rendering and escaping") {
    Table t;
    t.cols = {"x", "y"};
    CHECK(to_csv(t) == "x,y\n");
    t.row({"a,b", "plain"});
    t.row({"q\"q", "2"});
    CHECK(to_csv(t) == "x,y\n\"a,b\",plain\n\"q\"\"q\",2\n");
}

TEST_CASE("summary json carries the schema version") {
    Summary s;
    s.suite = "verify";
    s.pass = true;
    s.put("radius", "3");
    std::string j = to_json(s);
    CHECK(j.find("\"schema_version\": 1") != std::string::npos);
    CHECK(j.find("\"suite\": \"verify\"") != std::string::npos);
    CHECK(j.find("\"pass\": true") != std::string::npos);
    CHECK(j.find("\"radius\": \"3\"") != std::string::npos);
    CHECK(j.back() == '\n');
}

TEST_CASE("verify suite passes at small radius") {
    Config c;
    c.radius = 2;
    c.defect_radius = 2;
    c.word = "abab";
    SuiteResult r = run_suite("verify", c);
    CHECK(r.summary.pass);
    CHECK(!r.table.rows.empty());
}

TEST_CASE("defect suite reports the measured value") {
    Config c;
    c.defect_radius = 3;
    c.samples = 50;
    SuiteResult r = suite_defect(c);
    CHECK(r.summary.pass);
    REQUIRE(r.table.rows.size() == 1);
    auto colidx = [&](const std::string& name) {
        for (size_t i = 0; i < r.table.cols.size(); ++i)
            if (r.table.cols[i] == name) return int(i);
        return -1;
    };
    int iR = colidx("R"), in = colidx("defect_numerator"), id = colidx("defect_denominator");
    REQUIRE(iR >= 0);
    REQUIRE(in >= 0);
    REQUIRE(id >= 0);
    CHECK(r.table.rows[0][size_t(iR)] == "3");
    CHECK(r.table.rows[0][size_t(in)] == "2");
    CHECK(r.table.rows[0][size_t(id)] == "1");
    CHECK(colidx("argmax_g") >= 0);
    CHECK(colidx("argmax_gp") >= 0);
    CHECK(colidx("wallclock_ms") >= 0);
}

TEST_CASE("orbit growth suite is exact and deterministic") {
    Config c;
    c.orbit_n = 10;
    SuiteResult r1 = suite_orbit_growth(c);
    SuiteResult r2 = suite_orbit_growth(c);
    CHECK(r1.summary.pass);
    CHECK(to_csv(r1.table) == to_csv(r2.table));
    CHECK(to_json(r1.summary) == to_json(r2.summary));
    CHECK(r1.table.rows.size() == 10);
}

TEST_CASE("distance formula suite at small radius") {
    Config c;
    c.families = "ab";
    c.radius = 3;
    SuiteResult r = suite_distance_formula(c);
    CHECK(r.summary.pass);
    CHECK(r.table.rows.size() == 53);
    bool has_xi = false;
    for (auto& [k, v] : r.summary.fields)
        if (k == "xi_ab") {
            has_xi = true;
            CHECK(v == "0");
        }
    CHECK(has_xi);
}

TEST_CASE("profile suite in both modes") {
    Config c;
    c.families = "a,b";
    c.profile_radius = 3;
    c.off_distance = 4;
    SuiteResult tri = suite_profile(c);
    CHECK(tri.summary.pass);
    CHECK(!tri.table.rows.empty());

    Config d;
    d.families = "ab";
    d.profile_kind = "decay";
    d.profile_radius = 3;
    d.L = 2;
    d.K = 2;
    d.j_max = 500;
    d.tail_tol = 0.9;
    SuiteResult dec = suite_profile(d);
    CHECK(dec.summary.pass);
    CHECK(to_csv(dec.table) == to_csv(suite_profile(d).table));
}

TEST_CASE("theta suite") {
    Config c;
    c.k = 2;
    c.grid_max = 1500;
    c.j_cap = 100000;
    SuiteResult r = suite_theta(c);
    CHECK(r.summary.pass);
}

TEST_CASE("run_suite rejects unknown names") {
    Config c;
    CHECK_THROWS(run_suite("nope", c));
}
