#pragma once

#include <cstdint>
#include <vector>

#include "dynbv/ea.hpp"
#include "dynbv/states.hpp"

namespace dynbv {

/// Order-independent tallies of per-trial drift values (integers), so
/// estimates merge exactly across batches and thread counts.
struct DriftAccumulator {
    long long sum = 0;
    __int128 sum_sq = 0;
    long trials = 0;
    long aborted = 0;

    void add(long long v) {
        sum += v;
        sum_sq += static_cast<__int128>(v) * v;
        ++trials;
    }
    void add_abort() { ++aborted; }
    void merge(const DriftAccumulator& o) {
        sum += o.sum;
        sum_sq += o.sum_sq;
        trials += o.trials;
        aborted += o.aborted;
    }
};

struct DriftEstimate {
    double mean = 0;
    double standard_error = 0;
    long trials = 0;   // non-aborted
    long aborted = 0;  // cap hits, excluded from the mean
    double epsilon = 0;
    EaParams params;
    bool valid = false;  // trips when aborts exceed 0.1% of all trials

    static DriftEstimate from(const DriftAccumulator& acc, double epsilon,
                              const EaParams& params);
};

inline constexpr long kDefaultGenerationCap = 1000000;

/// Monte Carlo estimate of the degenerate population drift
/// E[Phi^t - Phi^(t+1) | Phi^t = floor(eps*n)]. Each trial starts from a
/// fresh degenerate population (zero positions resampled) and runs to the
/// next degenerate population. Trial t uses the rng stream (seed, t).
DriftEstimate estimate_degenerate_drift(const EaParams& params, double epsilon, long trials,
                                        long cap, std::uint64_t seed, int threads = 1);

/// Accumulator-level variant for exact batch merging.
DriftAccumulator degenerate_drift_accumulate(const EaParams& params, double epsilon,
                                             long trials, long cap, std::uint64_t seed,
                                             int threads = 1);

/// Same, but each trial starts at construct_state(spec); Phi^t is the zero
/// count of x^0. Pre-selection states (A/B) perform their selection first.
DriftEstimate estimate_state_drift(const StateSpec& spec, const EaParams& params, long trials,
                                   long cap, std::uint64_t seed, int threads = 1);

struct EjectFrequency {
    double frequency = 0;       // x^0-copy discarded | offspring accepted
    double standard_error = 0;  // binomial
    long accepted = 0;
    long trials = 0;
};

/// One-generation experiment from F(r): conditional on the offspring being
/// accepted, how often is a copy of x^0 the discarded string? Estimates
/// p-hat = 1/(1+(mu-1)r). Throws if no generation accepted an offspring.
EjectFrequency conditional_eject_frequency(const StateSpec& f_spec, const EaParams& params,
                                           long trials, std::uint64_t seed, int threads = 1);

struct SurfaceCell {
    double c = 0;
    double epsilon = 0;
    DriftEstimate estimate;
};

/// Grid of estimate_degenerate_drift values; cell (i_c, i_eps) uses the rng
/// stream derive_seed(seed, i_c * eps_grid.size() + i_eps), so a single-cell
/// grid reproduces a direct call seeded with derive_seed(seed, 0).
std::vector<SurfaceCell> drift_surface(const std::vector<double>& c_grid,
                                       const std::vector<double>& eps_grid,
                                       const EaParams& params_template, long trials_per_cell,
                                       long cap, std::uint64_t seed, int threads = 1);

}  // namespace dynbv
