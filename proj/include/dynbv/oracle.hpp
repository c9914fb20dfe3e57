#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dynbv/rational.hpp"

namespace dynbv {

/// Differing positions of up to 3 strings, partitioned into categories by
/// their joint bit pattern. Positions within a category are exchangeable, so
/// selection probabilities depend only on the category counts.
struct CategoryProfile {
    struct Category {
        std::array<std::uint8_t, 3> bits{};  // bits[i] = string i's bit here
        int count = 0;
    };
    int n_strings = 0;
    std::vector<Category> cats;
    int offspring = -1;  // ties among identical strings discard this index
};

/// A(r,k) = {x^0, x^(1-r), x^(1-k)}; the third string is the offspring.
CategoryProfile profile_A(long r, long k);
/// B(r,k) = {x^0, x^(1-r), x^(2-r-k)}; the third string is the offspring.
CategoryProfile profile_B(long r, long k);
/// {x^0, x^(1-r)}; the second string is the offspring.
CategoryProfile profile_pair(long r);

/// Exact probability, per string, of being discarded as least fit under a
/// uniform random priority order over the differing positions. Enumerates
/// category arrangements (multinomial weighting), not raw permutations.
/// Requires n_strings in {2,3} and total count <= 12.
std::vector<Rational> exact_discard_distribution(const CategoryProfile& profile);

struct ExactChainResult {
    Rational drift;              // m - E[zero count at the next degenerate population]
    Rational expected_phi_next;
    std::size_t state_count;     // transient states of the lumped chain
    std::uint64_t transition_digest;
};

/// Exact degenerate-population drift at tiny n by absorbing-chain linear
/// algebra in rationals. Populations are lumped by joint bit-pattern counts
/// (exchangeability of positions makes the lumping exact). Mutation rate is
/// (c_num/c_den)/n. Supports n <= 5, mu in {1, 2}.
ExactChainResult exact_tiny_chain_drift(int n, int mu, long c_num, long c_den, int m);

/// Enumeration check of the selection symmetry: with a uniform order over
/// the r+1 differing positions of {x^0, x^(1-r)} plus one uniformly
/// interleaved mutation marker, the events {f(x^(1-r)) >= f(x^0)} and
/// {B_0 > B_min} are independent. Returns exact equality of joint and
/// product probabilities; `perturbed` biases the order (weight 2 whenever
/// the extra one-bit ranks first) as a negative control.
bool conditional_symmetry_check(long r, bool perturbed = false);

}  // namespace dynbv
