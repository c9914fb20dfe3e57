#include "dynbv/weights.hpp"

#include <stdexcept>

namespace dynbv {

WeightDistribution WeightDistribution::exponential(double rate) {
    if (!(rate > 0)) throw std::invalid_argument("exponential rate must be > 0");
    return {Kind::exponential, rate};
}

WeightDistribution WeightDistribution::geometric(double p) {
    if (!(p > 0) || !(p < 1)) throw std::invalid_argument("geometric p must be in (0,1)");
    return {Kind::geometric, p};
}

WeightDistribution WeightDistribution::uniform01() { return {Kind::uniform01, 1.0}; }

WeightDistribution WeightDistribution::point_mass(double value) {
    if (!(value > 0)) throw std::invalid_argument("point mass must be > 0");
    return {Kind::point_mass, value};
}

double WeightDistribution::sample(Rng& rng) const {
    switch (kind) {
        case Kind::exponential:
            return std::exponential_distribution<double>(param)(rng);
        case Kind::geometric:
            // support {1, 2, ...} so weights stay positive
            return 1.0 + std::geometric_distribution<long>(param)(rng);
        case Kind::uniform01: {
            // uniform on (0, 1]
            double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
            return 1.0 - u;
        }
        case Kind::point_mass:
            return param;
    }
    throw std::logic_error("unreachable");
}

double WeightDistribution::mean() const {
    switch (kind) {
        case Kind::exponential: return 1.0 / param;
        case Kind::geometric: return 1.0 / param;
        case Kind::uniform01: return 0.5;
        case Kind::point_mass: return param;
    }
    throw std::logic_error("unreachable");
}

std::vector<double> sample_weights(const WeightDistribution& dist, std::size_t n, Rng& rng) {
    std::vector<double> w(n);
    for (auto& x : w) x = dist.sample(rng);
    return w;
}

double linear_fitness(const BitString& x, std::span<const double> weights) {
    if (weights.size() != x.size()) throw std::invalid_argument("weight count mismatch");
    double f = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] > 0)) throw std::invalid_argument("weights must be positive");
        if (x.bit(i)) f += weights[i];
    }
    return f;
}

}  // namespace dynbv
