#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dynbv/bitstring.hpp"
#include "dynbv/rng.hpp"

namespace dynbv {

enum class Cmp { x_fitter, y_fitter, equal };

/// One generation's random priority order over positions.
///
/// Under BinVal weights 2^(n-i) applied along a random permutation, comparing
/// two strings reduces to: whoever holds a one-bit at the highest-priority
/// position where they differ is fitter. So the ranking never needs weights,
/// only an order. The order can be sampled lazily over just the positions
/// where this generation's candidates differ; the restriction of a uniform
/// permutation of all n positions to any subset is a uniform order on that
/// subset, so both modes induce the same selection distribution.
class GenerationRanking {
public:
    /// Uniform order over the given positions only (lazy mode). Comparisons
    /// are valid for strings that agree outside `positions`.
    static GenerationRanking over_positions(std::vector<std::uint32_t> positions, Rng& rng);

    /// Uniform order over all n positions (full mode).
    static GenerationRanking full(std::size_t n, Rng& rng);

    GenerationRanking() = default;

    /// Re-seat this ranking over new positions by swapping buffers with
    /// `positions` (both vectors keep their capacity across generations).
    void reset_over_positions(std::vector<std::uint32_t>& positions, Rng& rng);

    /// Positions from highest to lowest priority.
    std::span<const std::uint32_t> priority_order() const { return order_; }

    Cmp compare(const BitString& x, const BitString& y) const;

    /// Position of the first zero-bit of z in priority order (B_z), if any.
    std::optional<std::uint32_t> first_zero_bit(const BitString& z) const;

    /// Highest-priority element of `positions` (their B_0 analogue); nullopt
    /// for an empty set.
    std::optional<std::uint32_t> first_of(std::span<const std::uint32_t> positions) const;

private:
    std::vector<std::uint32_t> order_;   // order_[0] = highest priority
    std::vector<std::uint32_t> rank_of_; // full mode only: rank_of_[pos]
    bool full_ = false;
};

/// Index of a least-fit string under the ranking. Distinct strings are always
/// strictly ordered, so ties arise only between bitwise-identical strings and
/// are broken uniformly at random -- except that when `offspring` is given,
/// ties involving it are resolved by discarding the offspring (the
/// offspring-rejected convention for duplicates).
std::size_t least_fit(std::span<const BitString* const> s, const GenerationRanking& ranking,
                      Rng& rng, std::optional<std::size_t> offspring = std::nullopt);

/// Probability 1/(r+1) that offspring x^(1-r) beats x^0 (r one-bits lost,
/// one zero-bit gained); reference value for frequency tests.
double accept_probability_check(long r);

}  // namespace dynbv
