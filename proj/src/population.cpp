#include "dynbv/population.hpp"

#include <bit>
#include <stdexcept>

namespace dynbv {

Population::Population(std::vector<BitString> m) : members(std::move(m)) {
    if (members.empty()) throw std::invalid_argument("population needs mu >= 1");
    for (const auto& s : members)
        if (s.size() != members.front().size())
            throw std::invalid_argument("population members differ in length");
}

Population::Population(std::size_t mu, const BitString& x) {
    if (mu == 0) throw std::invalid_argument("population needs mu >= 1");
    members.assign(mu, x);
}

bool is_degenerate(const Population& p) {
    for (std::size_t i = 1; i < p.members.size(); ++i)
        if (p.members[i] != p.members[0]) return false;
    return true;
}

void diff_positions_into(std::span<const BitString* const> strings,
                         std::vector<std::uint32_t>& out) {
    out.clear();
    if (strings.size() < 2) return;
    const auto base = strings[0]->words();
    const std::size_t nwords = base.size();
    for (std::size_t w = 0; w < nwords; ++w) {
        std::uint64_t diff = 0;
        for (std::size_t s = 1; s < strings.size(); ++s)
            diff |= base[w] ^ strings[s]->words()[w];
        while (diff) {
            const int b = std::countr_zero(diff);
            out.push_back(static_cast<std::uint32_t>(w * 64 + b));
            diff &= diff - 1;
        }
    }
}

std::vector<std::uint32_t> diff_positions(std::span<const BitString* const> strings) {
    std::vector<std::uint32_t> out;
    diff_positions_into(strings, out);
    return out;
}

std::vector<std::uint32_t> diff_positions(const Population& p) {
    std::vector<const BitString*> ptrs;
    ptrs.reserve(p.members.size());
    for (const auto& s : p.members) ptrs.push_back(&s);
    return diff_positions(ptrs);
}

std::vector<std::uint32_t> diff_positions(const Population& p, const BitString& extra) {
    std::vector<const BitString*> ptrs;
    ptrs.reserve(p.members.size() + 1);
    for (const auto& s : p.members) ptrs.push_back(&s);
    ptrs.push_back(&extra);
    return diff_positions(ptrs);
}

}  // namespace dynbv
