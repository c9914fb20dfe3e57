#include "dynbv/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "dynbv/oracle.hpp"
#include "dynbv/parallel.hpp"

#include "json.hpp"

namespace dynbv {

Value Value::str(std::string s) {
    Value v;
    v.kind = Kind::text;
    v.text = std::move(s);
    return v;
}

Value Value::of(long long x) {
    Value v;
    v.kind = Kind::integer;
    v.i = x;
    return v;
}

Value Value::of(double x) {
    Value v;
    v.kind = Kind::real;
    v.d = x;
    return v;
}

std::string Value::render() const {
    switch (kind) {
        case Kind::text: return text;
        case Kind::integer: return std::to_string(i);
        case Kind::real: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", d);
            return buf;
        }
    }
    return {};
}

std::string to_csv(const Table& t) {
    std::ostringstream out;
    for (std::size_t i = 0; i < t.header.size(); ++i)
        out << (i ? "," : "") << t.header[i];
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << row[i].render();
        out << "\n";
    }
    return out.str();
}

std::string to_json(const Table& t) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size() && i < t.header.size(); ++i) {
            switch (row[i].kind) {
                case Value::Kind::text: obj[t.header[i]] = row[i].text; break;
                case Value::Kind::integer: obj[t.header[i]] = row[i].i; break;
                case Value::Kind::real: obj[t.header[i]] = row[i].d; break;
            }
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

namespace {

std::size_t column_index(const Table& t, const std::string& name) {
    for (std::size_t i = 0; i < t.header.size(); ++i)
        if (t.header[i] == name) return i;
    throw std::invalid_argument("missing column: " + name);
}

std::string svg_color(double v, double scale) {
    // diverging map: negative -> red, positive -> blue
    double x = scale > 0 ? std::clamp(v / scale, -1.0, 1.0) : 0.0;
    int r = 255, g = 255, b = 255;
    if (x > 0) {
        r = static_cast<int>(255 * (1 - x));
        g = static_cast<int>(255 * (1 - 0.55 * x));
    } else {
        g = static_cast<int>(255 * (1 + 0.55 * x));
        b = static_cast<int>(255 * (1 + x));
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

}  // namespace

std::string to_svg_drift(const Table& t) {
    const std::size_t ci = column_index(t, "c");
    const std::size_t ei = column_index(t, "eps");
    const std::size_t mi = column_index(t, "mean");
    std::vector<double> cs, es;
    double maxabs = 0;
    for (const auto& row : t.rows) {
        cs.push_back(row[ci].d);
        es.push_back(row[ei].d);
        maxabs = std::max(maxabs, std::abs(row[mi].d));
    }
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());

    const int cell = 28, margin = 70;
    const int width = margin + cell * static_cast<int>(cs.size()) + 20;
    const int height = margin + cell * static_cast<int>(es.size()) + 20;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    svg << "<text x=\"" << margin << "\" y=\"16\" font-size=\"12\">degenerate population "
           "drift (blue &gt; 0, red &lt; 0)</text>\n";
    for (const auto& row : t.rows) {
        auto itc = std::find(cs.begin(), cs.end(), row[ci].d);
        auto ite = std::find(es.begin(), es.end(), row[ei].d);
        const int x = margin + cell * static_cast<int>(itc - cs.begin());
        const int y = margin + cell * static_cast<int>(ite - es.begin());
        svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\""
            << cell << "\" fill=\"" << svg_color(row[mi].d, maxabs)
            << "\" stroke=\"#888\"><title>c=" << row[ci].render() << " eps=" << row[ei].render()
            << " drift=" << row[mi].render() << "</title></rect>\n";
    }
    for (std::size_t i = 0; i < cs.size(); ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", cs[i]);
        svg << "<text x=\"" << margin + cell * static_cast<int>(i) << "\" y=\"" << margin - 8
            << "\" font-size=\"10\">" << buf << "</text>\n";
    }
    for (std::size_t i = 0; i < es.size(); ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", es[i]);
        svg << "<text x=\"6\" y=\"" << margin + cell * static_cast<int>(i) + 18
            << "\" font-size=\"10\">" << buf << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

// ---------------------------------------------------------------------------

Table run_drift(const DriftExperiment& ex) {
    EaParams params;
    params.n = ex.n;
    params.mu = ex.mu;
    params.c = ex.c_grid.empty() ? 1.0 : ex.c_grid.front();
    params.crossover_prob = ex.crossover;
    auto cells = drift_surface(ex.c_grid, ex.eps_grid, params, ex.trials, ex.cap, ex.seed,
                               ex.threads);
    Table t;
    t.header = {"c", "eps", "n", "mu", "mean", "stderr", "trials", "aborted", "seed"};
    bool all_valid = true;
    for (const auto& cell : cells) {
        all_valid = all_valid && cell.estimate.valid;
        t.rows.push_back({Value::of(cell.c), Value::of(cell.epsilon),
                          Value::of(static_cast<long long>(ex.n)),
                          Value::of(static_cast<long long>(ex.mu)),
                          Value::of(cell.estimate.mean), Value::of(cell.estimate.standard_error),
                          Value::of(static_cast<long long>(cell.estimate.trials)),
                          Value::of(static_cast<long long>(cell.estimate.aborted)),
                          Value::of(static_cast<long long>(ex.seed))});
    }
    if (!all_valid)
        throw EstimateInvalid("aborted trials exceed 0.1%; raise the cap or lower epsilon");
    return t;
}

Table run_analytic(const AnalyticExperiment& ex) {
    Table t;
    t.header = {"c", "f0", "f1", "c0", "eps_star", "mu0"};
    const double c0 = find_c0(ex.series);
    for (double c : ex.c_grid) {
        const SeriesConfig cfg = SeriesConfig::for_c(c, ex.series.tail_target);
        const double v0 = f0(c, cfg);
        const double v1 = f1(c, cfg);
        const double es = v1 != 0 ? -v0 / v1 : INFINITY;
        t.rows.push_back({Value::of(c), Value::of(v0), Value::of(v1), Value::of(c0),
                          Value::of(es), Value::of(mu_zero(c))});
    }
    return t;
}

OracleCheckReport run_oracle_check(const OracleCheckExperiment& ex) {
    OracleCheckReport rep;
    rep.all_pass = true;
    rep.table.header = {"check", "r", "k", "analytic", "oracle", "pass"};
    auto row = [&](const std::string& name, long r, long k, const Rational& expect,
                   const Rational& got) {
        const bool ok = expect == got;
        rep.all_pass = rep.all_pass && ok;
        rep.table.rows.push_back({Value::str(name), Value::of(static_cast<long long>(r)),
                                  Value::of(static_cast<long long>(k)),
                                  Value::str(to_string(expect)), Value::str(to_string(got)),
                                  Value::of(static_cast<long long>(ok))});
    };
    for (long r = 1; r <= ex.max_r; ++r) {
        for (long k = 1; k <= ex.max_k; ++k) {
            auto a = discard_probs_A(r, k);
            auto ea = exact_discard_distribution(profile_A(r, k));
            row("A_discard_lost_r", r, k, a.lost_r, ea[1]);
            row("A_discard_lost_k", r, k, a.lost_k, ea[2]);
            row("A_discard_x0", r, k, a.x0, ea[0]);
            auto b = discard_probs_B(r, k);
            auto eb = exact_discard_distribution(profile_B(r, k));
            row("B_discard_x0", r, k, b.x0, eb[0]);
            row("B_discard_lost_r", r, k, b.lost_r, eb[1]);
            row("B_discard_offspring", r, k, b.offspring, eb[2]);
        }
    }
    for (long r = 1; r <= ex.pair_max_r; ++r) {
        auto d = exact_discard_distribution(profile_pair(r));
        // offspring x^(1-r) accepted iff x^0 is discarded
        row("pair_accept", r, 0, Rational(1, r + 1), d[0]);
    }
    for (long r = 1; r <= ex.sym_max_r; ++r) {
        const bool ok = conditional_symmetry_check(r);
        rep.all_pass = rep.all_pass && ok;
        rep.table.rows.push_back({Value::str("symmetry_independent"),
                                  Value::of(static_cast<long long>(r)), Value::of(0LL),
                                  Value::str("independent"),
                                  Value::str(ok ? "independent" : "dependent"),
                                  Value::of(static_cast<long long>(ok))});
    }
    return rep;
}

Table run_runtime(const RuntimeExperiment& ex) {
    Table t;
    t.header = {"n",      "mu",   "c",      "start_eps", "median_generations",
                "success_rate", "runs", "budget", "seed"};
    std::uint64_t stream = 0;
    for (std::size_t n : ex.n_grid) {
        EaParams params;
        params.n = n;
        params.mu = ex.mu;
        params.c = ex.c;
        params.crossover_prob = ex.crossover;
        params.validate();
        const long budget = static_cast<long>(
            std::ceil(ex.budget_factor * static_cast<double>(n) * std::log(static_cast<double>(n))));
        const std::size_t m = static_cast<std::size_t>(ex.start_eps * static_cast<double>(n));
        std::vector<long> gens(static_cast<std::size_t>(ex.runs));
        std::vector<char> success(static_cast<std::size_t>(ex.runs));
        const std::uint64_t run_seed = derive_seed(ex.seed, stream++);
        parallel_chunks(ex.runs, ex.threads, [&](long b, long e, int) {
            EaEngine engine(params);
            for (long i = b; i < e; ++i) {
                Rng rng = make_stream(run_seed, static_cast<std::uint64_t>(i));
                BitString x0 = BitString::with_zero_count(n, m, rng);
                RunResult res = engine.run_to_optimum(Population(ex.mu, x0), budget, rng);
                gens[static_cast<std::size_t>(i)] = res.generations_used;
                success[static_cast<std::size_t>(i)] = res.reached_optimum ? 1 : 0;
            }
        });
        std::vector<long> sorted = gens;
        std::sort(sorted.begin(), sorted.end());
        const double median =
            ex.runs % 2 ? static_cast<double>(sorted[static_cast<std::size_t>(ex.runs / 2)])
                        : 0.5 * (static_cast<double>(sorted[static_cast<std::size_t>(ex.runs / 2 - 1)]) +
                                 static_cast<double>(sorted[static_cast<std::size_t>(ex.runs / 2)]));
        long ok = 0;
        for (char s : success) ok += s;
        t.rows.push_back({Value::of(static_cast<long long>(n)),
                          Value::of(static_cast<long long>(ex.mu)), Value::of(ex.c),
                          Value::of(ex.start_eps), Value::of(median),
                          Value::of(static_cast<double>(ok) / static_cast<double>(ex.runs)),
                          Value::of(static_cast<long long>(ex.runs)),
                          Value::of(static_cast<long long>(budget)),
                          Value::of(static_cast<long long>(ex.seed))});
    }
    return t;
}

namespace {

struct PointEstimate {
    double mean = 0, se = 0;
    long trials = 0;
    bool decided = false;  // |mean| exceeded 3*stderr before the trial cap
};

PointEstimate adaptive_sign(const EaParams& params, double eps, long batch, long max_trials,
                            long cap, std::uint64_t point_seed, int threads) {
    DriftAccumulator acc;
    std::uint64_t batch_index = 0;
    while (acc.trials + acc.aborted < max_trials) {
        const long want = std::min(batch, max_trials - acc.trials - acc.aborted);
        acc.merge(degenerate_drift_accumulate(params, eps, want, cap,
                                              derive_seed(point_seed, batch_index++), threads));
        auto est = DriftEstimate::from(acc, eps, params);
        if (est.trials > 1 && std::abs(est.mean) > 3 * est.standard_error &&
            est.standard_error > 0) {
            return {est.mean, est.standard_error, est.trials, true};
        }
    }
    auto est = DriftEstimate::from(acc, eps, params);
    return {est.mean, est.standard_error, est.trials, false};
}

}  // namespace

ThresholdResult run_threshold(const ThresholdExperiment& ex) {
    EaParams params;
    params.n = ex.n;
    params.mu = ex.mu;
    params.c = ex.c_lo;
    params.crossover_prob = ex.crossover;
    switch (ex.fitness) {
        case ThresholdExperiment::Fitness::dynbv:
            params.fitness = FitnessMode::dynbv_mode();
            break;
        case ThresholdExperiment::Fitness::exponential:
            params.fitness = FitnessMode::dynamic_linear(WeightDistribution::exponential(1.0));
            break;
        case ThresholdExperiment::Fitness::geometric:
            params.fitness = FitnessMode::dynamic_linear(WeightDistribution::geometric(ex.geom_p));
            break;
    }
    params.validate();
    if (!(ex.c_lo < ex.c_hi)) throw std::invalid_argument("need c_lo < c_hi");

    ThresholdResult res;
    res.points.header = {"c", "mean", "stderr", "trials", "decided"};
    std::uint64_t point_index = 0;
    auto measure = [&](double c) {
        EaParams p = params;
        p.c = c;
        auto pe = adaptive_sign(p, ex.eps, ex.batch, ex.max_trials_per_point, ex.cap,
                                derive_seed(ex.seed, point_index++), ex.threads);
        res.points.rows.push_back({Value::of(c), Value::of(pe.mean), Value::of(pe.se),
                                   Value::of(static_cast<long long>(pe.trials)),
                                   Value::of(static_cast<long long>(pe.decided))});
        return pe.mean > 0 ? 1 : -1;
    };

    int sign_lo = measure(ex.c_lo);
    int sign_hi = measure(ex.c_hi);
    if (sign_lo <= 0 || sign_hi >= 0)
        throw NoSignChange("drift sign does not change over [c_lo, c_hi]");
    double lo = ex.c_lo, hi = ex.c_hi;
    while (hi - lo > ex.resolution) {
        const double mid = 0.5 * (lo + hi);
        if (measure(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    res.lo = lo;
    res.hi = hi;
    res.summary.header = {"fitness", "eps", "n", "mu", "c_lo", "c_hi", "trials_max", "seed"};
    const char* names[] = {"dynbv", "dynamic-linear-exponential", "dynamic-linear-geometric"};
    res.summary.rows.push_back(
        {Value::str(names[static_cast<int>(ex.fitness)]), Value::of(ex.eps),
         Value::of(static_cast<long long>(ex.n)), Value::of(static_cast<long long>(ex.mu)),
         Value::of(lo), Value::of(hi), Value::of(static_cast<long long>(ex.max_trials_per_point)),
         Value::of(static_cast<long long>(ex.seed))});
    return res;
}

}  // namespace dynbv
