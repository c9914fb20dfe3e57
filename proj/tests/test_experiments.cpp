#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>

#include "dynbv/experiments.hpp"

#include "json.hpp"

using namespace dynbv;
using doctest::Approx;

TEST_CASE("values render deterministically with 17 significant digits") {
    const double x = 0.1 + 0.2;
    Value v = Value::of(x);
    CHECK(v.render() == "0.30000000000000004");
    CHECK(std::strtod(v.render().c_str(), nullptr) == x);
    CHECK(Value::of(42LL).render() == "42");
    CHECK(Value::str("a/b").render() == "a/b");
}

TEST_CASE("csv and json emission") {
    Table t;
    t.header = {"a", "b", "c"};
    t.rows.push_back({Value::of(1LL), Value::of(0.5), Value::str("x")});
    CHECK(to_csv(t) == "a,b,c\n1,0.5,x\n");
    auto parsed = nlohmann::json::parse(to_json(t));
    REQUIRE(parsed.is_array());
    CHECK(parsed[0]["a"] == 1);
    CHECK(parsed[0]["b"] == 0.5);
    CHECK(parsed[0]["c"] == "x");
}

TEST_CASE("run_analytic emits the reference constants") {
    AnalyticExperiment ex;
    ex.c_grid = {1.0, 2.4931};
    Table t = run_analytic(ex);
    REQUIRE(t.rows.size() == 2);
    const auto& row_c0 = t.rows[1];
    CHECK(std::abs(row_c0[1].d) < 3e-5);              // f0 at c0
    CHECK(row_c0[3].d == Approx(2.4931).epsilon(1e-3));  // c0 column
    CHECK(t.rows[0][5].d == Approx(4.71828).epsilon(1e-4));  // mu0 at c=1
    CHECK(std::isfinite(t.rows[0][4].d));             // eps_star
}

TEST_CASE("run_oracle_check passes everywhere") {
    OracleCheckExperiment ex;
    auto rep = run_oracle_check(ex);
    CHECK(rep.all_pass);
    // 6 rows per (r,k) pair + acceptance rows + symmetry rows
    CHECK(rep.table.rows.size() == 16 * 6 + 8 + 6);
    for (const auto& row : rep.table.rows) CHECK(row[5].i == 1);
}

TEST_CASE("run_drift: grid shape, determinism, thread independence") {
    DriftExperiment ex;
    ex.c_grid = {1.0, 2.0};
    ex.eps_grid = {0.0, 0.1};
    ex.n = 80;
    ex.mu = 2;
    ex.trials = 3000;
    ex.seed = 99;
    Table t1 = run_drift(ex);
    REQUIRE(t1.rows.size() == 4);
    CHECK(t1.rows[0][4].d == 0.0);  // eps = 0 row
    Table t2 = run_drift(ex);
    CHECK(to_csv(t1) == to_csv(t2));
    ex.threads = 3;
    Table t3 = run_drift(ex);
    CHECK(to_csv(t1) == to_csv(t3));
    ex.seed = 100;
    Table t4 = run_drift(ex);
    CHECK(to_csv(t1) != to_csv(t4));
}

TEST_CASE("svg heatmap renders one rect per cell") {
    DriftExperiment ex;
    ex.c_grid = {1.0, 1.5, 2.0};
    ex.eps_grid = {0.05, 0.1};
    ex.n = 60;
    ex.trials = 500;
    ex.seed = 5;
    Table t = run_drift(ex);
    std::string svg = to_svg_drift(t);
    std::size_t rects = 0, at = 0;
    while ((at = svg.find("<rect", at)) != std::string::npos) {
        ++rects;
        at += 5;
    }
    CHECK(rects == 6);
    CHECK(svg.find("<svg") == 0);
}

TEST_CASE("run_runtime covers the grid and succeeds at easy parameters") {
    RuntimeExperiment ex;
    ex.n_grid = {60, 120};
    ex.mu = 3;
    ex.c = 1.0;
    ex.start_eps = 0.1;
    ex.runs = 20;
    ex.seed = 2024;
    Table t = run_runtime(ex);
    REQUIRE(t.rows.size() == 2);
    for (const auto& row : t.rows) {
        CHECK(row[5].d >= 0.95);  // success rate
        CHECK(row[4].d > 0);      // median generations
        CHECK(row[4].d <= row[7].i);
    }
}

TEST_CASE("run_threshold brackets the (1+1)-EA DynBV transition") {
    ThresholdExperiment ex;
    ex.n = 500;
    ex.eps = 0.02;
    ex.c_lo = 1.0;
    ex.c_hi = 2.3;
    ex.resolution = 0.35;
    ex.batch = 20000;
    ex.max_trials_per_point = 200000;
    ex.seed = 7;
    auto res = run_threshold(ex);
    CHECK(res.lo < res.hi);
    CHECK(res.hi - res.lo <= 0.35 + 1e-9);
    // the (1+1)-EA threshold sits near 1.59; at this scale allow slack
    CHECK(res.lo > 1.1);
    CHECK(res.hi < 2.1);
    REQUIRE(res.summary.rows.size() == 1);
    CHECK(res.points.rows.size() >= 3);
}

TEST_CASE("run_threshold reports a missing sign change") {
    ThresholdExperiment ex;
    ex.n = 300;
    ex.eps = 0.02;
    ex.c_lo = 0.5;
    ex.c_hi = 1.0;  // drift positive at both ends
    ex.batch = 20000;
    ex.max_trials_per_point = 40000;
    ex.seed = 8;
    CHECK_THROWS_AS(run_threshold(ex), NoSignChange);
}
