#include "dynbv/ranking.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace dynbv {

GenerationRanking GenerationRanking::over_positions(std::vector<std::uint32_t> positions,
                                                    Rng& rng) {
    GenerationRanking g;
    g.order_ = std::move(positions);
    std::shuffle(g.order_.begin(), g.order_.end(), rng);
    return g;
}

void GenerationRanking::reset_over_positions(std::vector<std::uint32_t>& positions, Rng& rng) {
    full_ = false;
    rank_of_.clear();
    order_.swap(positions);
    std::shuffle(order_.begin(), order_.end(), rng);
}

GenerationRanking GenerationRanking::full(std::size_t n, Rng& rng) {
    GenerationRanking g;
    g.full_ = true;
    g.order_.resize(n);
    std::iota(g.order_.begin(), g.order_.end(), 0u);
    std::shuffle(g.order_.begin(), g.order_.end(), rng);
    g.rank_of_.resize(n);
    for (std::uint32_t r = 0; r < n; ++r) g.rank_of_[g.order_[r]] = r;
    return g;
}

Cmp GenerationRanking::compare(const BitString& x, const BitString& y) const {
    if (x.size() != y.size()) throw std::invalid_argument("compare: length mismatch");
    for (auto p : order_) {
        const bool bx = x.bit(p), by = y.bit(p);
        if (bx != by) return bx ? Cmp::x_fitter : Cmp::y_fitter;
    }
    return Cmp::equal;
}

std::optional<std::uint32_t> GenerationRanking::first_zero_bit(const BitString& z) const {
    for (auto p : order_)
        if (!z.bit(p)) return p;
    return std::nullopt;
}

std::optional<std::uint32_t> GenerationRanking::first_of(
    std::span<const std::uint32_t> positions) const {
    if (positions.empty()) return std::nullopt;
    if (full_) {
        std::uint32_t best = positions[0];
        for (auto p : positions)
            if (rank_of_[p] < rank_of_[best]) best = p;
        return best;
    }
    for (auto p : order_)
        if (std::find(positions.begin(), positions.end(), p) != positions.end()) return p;
    return std::nullopt;
}

std::size_t least_fit(std::span<const BitString* const> s, const GenerationRanking& ranking,
                      Rng& rng, std::optional<std::size_t> offspring) {
    if (s.size() < 2) throw std::invalid_argument("least_fit needs at least 2 strings");
    if (s.size() > 64) throw std::invalid_argument("least_fit supports at most 64 strings");

    // Walk positions from highest priority; keep the strings holding a
    // zero-bit whenever the still-tied set splits. Whatever remains at the
    // end is a set of bitwise-identical minima.
    std::uint64_t alive = (s.size() == 64) ? ~0ULL : ((1ULL << s.size()) - 1);
    for (auto p : ranking.priority_order()) {
        std::uint64_t zeros = 0;
        std::uint64_t rest = alive;
        while (rest) {
            const int i = std::countr_zero(rest);
            rest &= rest - 1;
            if (!s[i]->bit(p)) zeros |= 1ULL << i;
        }
        if (zeros != 0 && zeros != alive) {
            alive = zeros;
            if ((alive & (alive - 1)) == 0) return std::countr_zero(alive);
        }
    }
    if (offspring && (alive >> *offspring) & 1) return *offspring;
    // uniform choice among the tied identical strings
    const int count = std::popcount(alive);
    std::uniform_int_distribution<int> pick(0, count - 1);
    int k = pick(rng);
    while (true) {
        const int i = std::countr_zero(alive);
        if (k-- == 0) return i;
        alive &= alive - 1;
    }
}

double accept_probability_check(long r) {
    if (r < 0) throw std::invalid_argument("r must be >= 0");
    return 1.0 / static_cast<double>(r + 1);
}

}  // namespace dynbv
