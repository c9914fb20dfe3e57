#include "dynbv/drift.hpp"

#include <cmath>
#include <stdexcept>

#include "dynbv/parallel.hpp"
#include "dynbv/ranking.hpp"

namespace dynbv {

DriftEstimate DriftEstimate::from(const DriftAccumulator& acc, double epsilon,
                                  const EaParams& params) {
    DriftEstimate e;
    e.trials = acc.trials;
    e.aborted = acc.aborted;
    e.epsilon = epsilon;
    e.params = params;
    if (acc.trials > 0) {
        const double n = static_cast<double>(acc.trials);
        e.mean = static_cast<double>(acc.sum) / n;
        if (acc.trials > 1) {
            const double ssq = static_cast<double>(acc.sum_sq);
            const double var = (ssq - n * e.mean * e.mean) / (n - 1.0);
            e.standard_error = std::sqrt(std::max(var, 0.0) / n);
        }
    }
    const double total = static_cast<double>(acc.trials + acc.aborted);
    e.valid = acc.trials > 0 && static_cast<double>(acc.aborted) <= 0.001 * total;
    return e;
}

namespace {

template <class TrialFn>
DriftAccumulator run_trials(long trials, int threads, TrialFn&& trial) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    std::vector<DriftAccumulator> parts(static_cast<std::size_t>(std::max(threads, 1)));
    parallel_chunks(trials, threads, [&](long b, long e, int w) {
        DriftAccumulator& acc = parts[static_cast<std::size_t>(w)];
        for (long t = b; t < e; ++t) trial(t, acc);
    });
    DriftAccumulator acc;
    for (const auto& p : parts) acc.merge(p);
    return acc;
}

}  // namespace

DriftAccumulator degenerate_drift_accumulate(const EaParams& params, double epsilon,
                                             long trials, long cap, std::uint64_t seed,
                                             int threads) {
    params.validate();
    if (epsilon < 0 || epsilon > 1) throw std::invalid_argument("epsilon must be in [0,1]");
    threads = std::max(threads, 1);
    const std::size_t m = static_cast<std::size_t>(epsilon * static_cast<double>(params.n));
    if (m > params.n) throw std::invalid_argument("floor(eps*n) exceeds n");

    struct Worker {
        EaEngine engine;
        Population pop;
        explicit Worker(const EaParams& p) : engine(p) {}
    };
    std::vector<Worker> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) workers.emplace_back(params);
    const long chunk = (trials + threads - 1) / threads;

    auto acc = run_trials(trials, threads, [&](long t, DriftAccumulator& a) {
        Worker& w = workers[static_cast<std::size_t>(t / chunk)];
        Rng rng = make_stream(seed, static_cast<std::uint64_t>(t));
        BitString x0 = BitString::with_zero_count(params.n, m, rng);
        if (w.pop.members.size() != params.mu) {
            w.pop = Population(params.mu, x0);
        } else {
            for (auto& s : w.pop.members) s = x0;
        }
        auto res = w.engine.run_to_next_degenerate(w.pop, cap, rng);
        if (res.hit_cap) {
            a.add_abort();
        } else {
            a.add(static_cast<long long>(m) -
                  static_cast<long long>(w.pop.members[0].zero_count()));
        }
    });
    return acc;
}

DriftEstimate estimate_degenerate_drift(const EaParams& params, double epsilon, long trials,
                                        long cap, std::uint64_t seed, int threads) {
    auto acc = degenerate_drift_accumulate(params, epsilon, trials, cap, seed, threads);
    if (acc.trials == 0) throw std::runtime_error("all trials aborted at the generation cap");
    return DriftEstimate::from(acc, epsilon, params);
}

namespace {

// Selection-only step for a pre-selection (mu+1 member) state; returns the
// population after discarding the least fit (offspring = last slot).
void preselect(Population& pop, Rng& rng) {
    std::vector<const BitString*> ptrs;
    ptrs.reserve(pop.members.size());
    for (const auto& s : pop.members) ptrs.push_back(&s);
    auto diff = diff_positions(ptrs);
    auto ranking = GenerationRanking::over_positions(std::move(diff), rng);
    const std::size_t out = least_fit(ptrs, ranking, rng, pop.members.size() - 1);
    pop.members.erase(pop.members.begin() + static_cast<std::ptrdiff_t>(out));
}

}  // namespace

DriftEstimate estimate_state_drift(const StateSpec& spec, const EaParams& params, long trials,
                                   long cap, std::uint64_t seed, int threads) {
    params.validate();
    if (spec.n != params.n) throw std::invalid_argument("state spec dimension mismatch");
    if ((spec.kind == StateSpec::Kind::a || spec.kind == StateSpec::Kind::b) && params.mu != 2)
        throw std::invalid_argument("A/B states require mu = 2");
    threads = std::max(threads, 1);

    std::vector<EaEngine> engines;
    for (int i = 0; i < threads; ++i) engines.emplace_back(params);
    const long chunk = (trials + threads - 1) / threads;

    auto acc = run_trials(trials, threads, [&](long t, DriftAccumulator& a) {
        EaEngine& engine = engines[static_cast<std::size_t>(t / chunk)];
        Rng rng = make_stream(seed, static_cast<std::uint64_t>(t));
        ConstructedState st = construct_state(spec, params.mu, rng);
        if (st.pre_selection) preselect(st.pop, rng);
        long long value;
        if (is_degenerate(st.pop)) {
            value = static_cast<long long>(st.reference_zero_count) -
                    static_cast<long long>(st.pop.members[0].zero_count());
        } else {
            auto res = engine.run_to_next_degenerate(st.pop, cap, rng);
            if (res.hit_cap) {
                a.add_abort();
                return;
            }
            value = static_cast<long long>(st.reference_zero_count) -
                    static_cast<long long>(st.pop.members[0].zero_count());
        }
        a.add(value);
    });
    if (acc.trials == 0) throw std::runtime_error("all trials aborted at the generation cap");
    return DriftEstimate::from(acc, static_cast<double>(spec.m) / static_cast<double>(spec.n),
                               params);
}

EjectFrequency conditional_eject_frequency(const StateSpec& f_spec, const EaParams& params,
                                           long trials, std::uint64_t seed, int threads) {
    params.validate();
    if (f_spec.kind != StateSpec::Kind::f)
        throw std::invalid_argument("conditional_eject_frequency expects an F(r) spec");
    if (params.mu < 2) throw std::invalid_argument("mu must be >= 2");
    if (f_spec.r < 1) throw std::invalid_argument("r must be >= 1");
    threads = std::max(threads, 1);

    struct Counts {
        long accepted = 0;
        long x0_ejected = 0;
    };
    std::vector<Counts> parts(static_cast<std::size_t>(threads));
    std::vector<EaEngine> engines;
    for (int i = 0; i < threads; ++i) engines.emplace_back(params);

    parallel_chunks(trials, threads, [&](long b, long e, int w) {
        Counts& c = parts[static_cast<std::size_t>(w)];
        EaEngine& engine = engines[static_cast<std::size_t>(w)];
        for (long t = b; t < e; ++t) {
            Rng rng = make_stream(seed, static_cast<std::uint64_t>(t));
            ConstructedState st = construct_state(f_spec, params.mu, rng);
            StepInfo info = engine.step(st.pop, rng);
            if (info.offspring_rejected) continue;
            ++c.accepted;
            // x^0 copies occupy slots 0..mu-2 in a constructed F state
            if (info.discarded + 2 <= params.mu) ++c.x0_ejected;
        }
    });
    Counts total;
    for (const auto& p : parts) {
        total.accepted += p.accepted;
        total.x0_ejected += p.x0_ejected;
    }
    if (total.accepted == 0) throw std::runtime_error("no offspring was accepted");
    EjectFrequency f;
    f.trials = trials;
    f.accepted = total.accepted;
    f.frequency = static_cast<double>(total.x0_ejected) / static_cast<double>(total.accepted);
    f.standard_error =
        std::sqrt(f.frequency * (1.0 - f.frequency) / static_cast<double>(total.accepted));
    return f;
}

std::vector<SurfaceCell> drift_surface(const std::vector<double>& c_grid,
                                       const std::vector<double>& eps_grid,
                                       const EaParams& params_template, long trials_per_cell,
                                       long cap, std::uint64_t seed, int threads) {
    if (c_grid.empty() || eps_grid.empty())
        throw std::invalid_argument("drift_surface: grids must be non-empty");
    std::vector<SurfaceCell> cells;
    cells.reserve(c_grid.size() * eps_grid.size());
    std::uint64_t index = 0;
    for (double c : c_grid) {
        for (double eps : eps_grid) {
            EaParams p = params_template;
            p.c = c;
            SurfaceCell cell;
            cell.c = c;
            cell.epsilon = eps;
            cell.estimate = estimate_degenerate_drift(p, eps, trials_per_cell, cap,
                                                      derive_seed(seed, index), threads);
            cells.push_back(std::move(cell));
            ++index;
        }
    }
    return cells;
}

}  // namespace dynbv
