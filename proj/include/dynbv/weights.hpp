#pragma once

#include <span>
#include <vector>

#include "dynbv/bitstring.hpp"
#include "dynbv/rng.hpp"

namespace dynbv {

/// Weight distribution D for dynamic linear functions; all draws are
/// strictly positive.
struct WeightDistribution {
    enum class Kind { exponential, geometric, uniform01, point_mass };

    Kind kind = Kind::point_mass;
    double param = 1.0;  // rate for exponential, p for geometric, value for point mass

    static WeightDistribution exponential(double rate);
    static WeightDistribution geometric(double p);
    static WeightDistribution uniform01();
    static WeightDistribution point_mass(double value = 1.0);

    double sample(Rng& rng) const;
    double mean() const;
};

/// n i.i.d. positive draws from dist.
std::vector<double> sample_weights(const WeightDistribution& dist, std::size_t n, Rng& rng);

/// Weighted sum of one-bits; throws if any weight is non-positive or the
/// count mismatches.
double linear_fitness(const BitString& x, std::span<const double> weights);

}  // namespace dynbv
