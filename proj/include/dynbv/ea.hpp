#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dynbv/population.hpp"
#include "dynbv/ranking.hpp"
#include "dynbv/weights.hpp"

namespace dynbv {

/// Per-generation fitness model: DynBV ranking, or a dynamic linear function
/// with freshly sampled i.i.d. weights.
struct FitnessMode {
    enum class Kind { dynbv, dynamic_linear };
    Kind kind = Kind::dynbv;
    WeightDistribution dist{};

    static FitnessMode dynbv_mode() { return {Kind::dynbv, {}}; }
    static FitnessMode dynamic_linear(WeightDistribution d) {
        return {Kind::dynamic_linear, d};
    }
};

struct EaParams {
    std::size_t n = 0;
    std::size_t mu = 1;
    double c = 1.0;              // mutation rate c/n
    double crossover_prob = 0.0; // 0 = pure EA, 1/2 = the GA variant
    FitnessMode fitness = FitnessMode::dynbv_mode();

    void validate() const;  // throws std::invalid_argument
};

struct RunResult {
    long generations_used = 0;
    bool reached_optimum = false;
    Population final_population;
};

/// What one generation did; indices 0..mu-1 are population slots, mu is the
/// offspring.
struct StepInfo {
    std::size_t parent = 0;
    std::size_t parent2 = 0;  // equals parent unless crossover with mu >= 2
    bool used_crossover = false;
    std::size_t discarded = 0;
    bool offspring_rejected = false;
    std::uint32_t zero_flips = 0;  // parent zero-bits flipped by mutation
    std::uint32_t one_flips = 0;
};

/// Standard bit mutation: flip count ~ Binomial(n, c/n), positions distinct
/// and uniform. Requires 0 < c < n.
BitString mutate(const BitString& x, double c, Rng& rng);

/// Uniform crossover: each position from x1 or x2 with probability 1/2.
BitString crossover(const BitString& x1, const BitString& x2, Rng& rng);

/// Generation loop with reusable scratch buffers. A run owns its engine, its
/// population and its rng stream; engines are not shared across threads.
class EaEngine {
public:
    explicit EaEngine(EaParams params);

    const EaParams& params() const { return params_; }

    /// One generation in place: pick parent(s), produce one offspring, draw a
    /// fresh ranking (or weights), discard the least fit of the mu+1.
    StepInfo step(Population& pop, Rng& rng);

    /// The string removed from the selection pool by the most recent step
    /// (the offspring when it was rejected, otherwise the replaced member).
    const BitString& last_discarded() const { return offspring_; }

    struct DegenResult {
        long generations = 0;
        bool hit_cap = false;
        std::uint64_t zero_flips = 0;  // across all mutations of the run
    };

    /// Iterate until the population is degenerate (at least one generation).
    DegenResult run_to_next_degenerate(Population& pop, long cap, Rng& rng);

    RunResult run_to_optimum(Population pop, long budget, Rng& rng);

private:
    void make_offspring(const Population& pop, Rng& rng, StepInfo& info);
    std::size_t select_discard(const Population& pop, Rng& rng);
    std::size_t select_discard_linear(const Population& pop, Rng& rng);
    void sample_flips(std::size_t count, Rng& rng);

    EaParams params_;
    std::binomial_distribution<long> flip_count_;
    BitString offspring_;
    GenerationRanking ranking_;
    std::vector<std::uint32_t> flips_;
    std::vector<std::uint32_t> diff_;
    std::vector<const BitString*> ptrs_;
    std::vector<double> values_;
    std::vector<std::size_t> argmin_;
};

/// Contract-level one-generation step returning the next population.
Population step(const Population& pop, const EaParams& params, Rng& rng);

}  // namespace dynbv
