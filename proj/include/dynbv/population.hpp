#pragma once

#include <cstdint>
#include <vector>

#include "dynbv/bitstring.hpp"

namespace dynbv {

/// Multiset of mu equal-length search points.
struct Population {
    std::vector<BitString> members;

    Population() = default;
    explicit Population(std::vector<BitString> m);

    /// mu copies of the same string.
    Population(std::size_t mu, const BitString& x);

    std::size_t mu() const { return members.size(); }
    std::size_t n() const { return members.empty() ? 0 : members.front().size(); }
};

/// True iff all members are bitwise equal (a single member counts).
bool is_degenerate(const Population& p);

/// Positions where not all of the given strings agree, ascending.
std::vector<std::uint32_t> diff_positions(std::span<const BitString* const> strings);
std::vector<std::uint32_t> diff_positions(const Population& p);
std::vector<std::uint32_t> diff_positions(const Population& p, const BitString& extra);

/// Append to `out` instead of allocating (hot-loop variant).
void diff_positions_into(std::span<const BitString* const> strings,
                         std::vector<std::uint32_t>& out);

}  // namespace dynbv
