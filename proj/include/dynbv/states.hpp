#pragma once

#include <cstdint>

#include "dynbv/population.hpp"
#include "dynbv/rng.hpp"

namespace dynbv {

/// Symbolic description of a Markov-chain state, materializable as a
/// population. The reference individual x^0 has m zero-bits; offspring
/// variants x^(m1-m2) differ from it in pairwise-disjoint extra positions.
///
///   Degenerate : mu copies of x^0
///   F(r)       : { (mu-1) x^0, x^(1-r) }                        (mu members)
///   A(r,k)     : { x^0, x^(1-r), x^(1-k) }        (mu+1 = 3, pre-selection)
///   B(r,k)     : { x^0, x^(1-r), x^(2-r-k) }      (mu+1 = 3, pre-selection)
struct StateSpec {
    enum class Kind { degenerate, f, a, b };
    Kind kind = Kind::degenerate;
    long r = 0;
    long k = 0;
    std::size_t n = 0;
    std::size_t m = 0;  // zero count of x^0

    static StateSpec degenerate(std::size_t n, std::size_t m);
    static StateSpec F(long r, std::size_t n, std::size_t m);
    static StateSpec A(long r, long k, std::size_t n, std::size_t m);
    static StateSpec B(long r, long k, std::size_t n, std::size_t m);
};

struct ConstructedState {
    Population pop;
    bool pre_selection = false;        // true when pop holds mu+1 members
    std::size_t reference_zero_count = 0;  // m of x^0
};

/// Materialize the spec with x^0's zeros at uniformly random positions and
/// the variants' flipped positions sampled uniformly among eligible bits.
/// For F-states the x^0 copies occupy slots 0..mu-2 and x^(1-r) the last
/// slot. Throws std::invalid_argument for infeasible specs.
ConstructedState construct_state(const StateSpec& spec, std::size_t mu, Rng& rng);

}  // namespace dynbv
