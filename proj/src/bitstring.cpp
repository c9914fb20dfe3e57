#include "dynbv/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace dynbv {

void BitString::set_all_ones() {
    for (auto& w : words_) w = ~0ULL;
    if (n_ & 63) words_.back() = (1ULL << (n_ & 63)) - 1;
    zeros_ = 0;
}

std::size_t BitString::recount_zeros() const {
    std::size_t ones = 0;
    for (auto w : words_) ones += std::popcount(w);
    return n_ - ones;
}

BitString BitString::random(std::size_t n, Rng& rng) {
    BitString s(n);
    for (auto& w : s.words_) w = rng();
    if (n & 63) s.words_.back() &= (1ULL << (n & 63)) - 1;
    s.zeros_ = s.recount_zeros();
    return s;
}

BitString BitString::with_zero_count(std::size_t n, std::size_t m, Rng& rng) {
    if (m > n) throw std::invalid_argument("zero count exceeds length");
    // Rejection on the sparser side keeps the expected work at O(min(m, n-m)).
    const bool place_zeros = m <= n / 2;
    BitString s(n, place_zeros);
    std::size_t todo = place_zeros ? m : n - m;
    std::uniform_int_distribution<std::size_t> pos(0, n - 1);
    while (todo > 0) {
        std::size_t p = pos(rng);
        if (s.bit(p) == place_zeros) {
            s.flip(p);
            --todo;
        }
    }
    return s;
}

BitString BitString::from_words(std::size_t n, std::vector<std::uint64_t> words) {
    if (words.size() != (n + 63) / 64) throw std::invalid_argument("word count mismatch");
    BitString s(n);
    s.words_ = std::move(words);
    if (n & 63) s.words_.back() &= (1ULL << (n & 63)) - 1;
    s.zeros_ = s.recount_zeros();
    return s;
}

bool dominates(const BitString& x, const BitString& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dominates: length mismatch");
    auto xw = x.words(), yw = y.words();
    for (std::size_t i = 0; i < xw.size(); ++i)
        if (yw[i] & ~xw[i]) return false;
    return true;
}

}  // namespace dynbv
