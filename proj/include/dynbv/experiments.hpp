#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dynbv/analytic.hpp"
#include "dynbv/drift.hpp"

namespace dynbv {

/// Typed table cell; reals print with 17 significant digits so identical
/// runs produce byte-identical files.
struct Value {
    enum class Kind { text, integer, real };
    Kind kind = Kind::text;
    std::string text;
    long long i = 0;
    double d = 0;

    static Value str(std::string s);
    static Value of(long long v);
    static Value of(double v);
    std::string render() const;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Value>> rows;
};

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

/// Heatmap over a drift table (expects c, eps and mean columns); blue for
/// positive drift, red for negative.
std::string to_svg_drift(const Table& t);

// ---------------------------------------------------------------------------

struct DriftExperiment {
    std::vector<double> c_grid{2.2};
    std::vector<double> eps_grid{0.01};
    std::size_t n = 3000;
    std::size_t mu = 2;
    double crossover = 0.0;
    long trials = 100000;
    long cap = kDefaultGenerationCap;
    std::uint64_t seed = 0;
    int threads = 1;
};

/// Columns: c,eps,n,mu,mean,stderr,trials,aborted,seed.
/// Throws EstimateInvalid when any cell trips the abort-validity flag.
Table run_drift(const DriftExperiment& ex);

struct EstimateInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AnalyticExperiment {
    std::vector<double> c_grid;
    SeriesConfig series{};
};

/// Columns: c,f0,f1,c0,eps_star,mu0. Pure evaluation, no rng.
Table run_analytic(const AnalyticExperiment& ex);

struct OracleCheckExperiment {
    long max_r = 4;       // A/B discard triples checked for 1 <= r,k <= max
    long max_k = 4;
    long pair_max_r = 8;  // acceptance probability 1/(r+1)
    long sym_max_r = 6;   // Lemma-4 style symmetry
};

struct OracleCheckReport {
    Table table;  // columns: check,r,k,analytic,oracle,pass
    bool all_pass = false;
};

OracleCheckReport run_oracle_check(const OracleCheckExperiment& ex);

struct RuntimeExperiment {
    std::vector<std::size_t> n_grid{100, 200, 400, 800};
    std::size_t mu = 5;
    double c = 1.0;
    double crossover = 0.0;
    double start_eps = 0.1;
    long runs = 100;
    double budget_factor = 50.0;  // budget = ceil(factor * n * ln n)
    std::uint64_t seed = 0;
    int threads = 1;
};

/// Columns: n,mu,c,start_eps,median_generations,success_rate,runs,budget,seed.
Table run_runtime(const RuntimeExperiment& ex);

struct ThresholdExperiment {
    enum class Fitness { dynbv, exponential, geometric };
    Fitness fitness = Fitness::dynbv;
    double geom_p = 0.5;
    std::size_t n = 3000;
    std::size_t mu = 1;
    double crossover = 0.0;
    double eps = 0.005;
    double c_lo = 1.2;
    double c_hi = 2.2;
    double resolution = 0.05;
    long batch = 200000;
    long max_trials_per_point = 20000000;
    long cap = kDefaultGenerationCap;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct ThresholdResult {
    double lo = 0, hi = 0;  // bracketing interval for the sign change
    Table points;           // per-point diagnostics: c,mean,stderr,trials,decided
    Table summary;          // fitness,eps,n,mu,c_lo,c_hi,trials_max,seed
};

/// Bisection on the sign of the Monte Carlo drift at fixed small eps; per
/// point, trials grow in batches until |mean| > 3*stderr or the cap is hit.
/// Throws NoSignChange when the initial bracket has equal signs.
ThresholdResult run_threshold(const ThresholdExperiment& ex);

struct NoSignChange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dynbv
