#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "dynbv/rng.hpp"

namespace dynbv {

/// Fixed-length bit vector backed by 64-bit words, with a cached zero-bit
/// count. Positions are 0-indexed. The length never changes after
/// construction; bits outside [0, n) are kept at zero so word-wise scans
/// need no masking.
class BitString {
public:
    explicit BitString(std::size_t n, bool ones = false)
        : n_(n), words_((n + 63) / 64, 0), zeros_(n) {
        if (ones) set_all_ones();
    }

    static BitString all_ones(std::size_t n) { return BitString(n, true); }

    /// Uniformly random string.
    static BitString random(std::size_t n, Rng& rng);

    /// All-ones string with exactly m zero-bits at uniformly random positions.
    static BitString with_zero_count(std::size_t n, std::size_t m, Rng& rng);

    /// Adopt a word vector (bits past n are cleared; zero count recomputed).
    static BitString from_words(std::size_t n, std::vector<std::uint64_t> words);

    std::size_t size() const { return n_; }
    std::size_t zero_count() const { return zeros_; }
    std::size_t one_count() const { return n_ - zeros_; }

    bool bit(std::size_t i) const {
        assert(i < n_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    /// Flip one bit, maintaining the cached zero count.
    void flip(std::size_t i) {
        assert(i < n_);
        std::uint64_t& w = words_[i >> 6];
        const std::uint64_t mask = 1ULL << (i & 63);
        w ^= mask;
        zeros_ += (w & mask) ? -1 : +1;
    }

    void set(std::size_t i, bool v) {
        if (bit(i) != v) flip(i);
    }

    std::span<const std::uint64_t> words() const { return words_; }

    bool operator==(const BitString& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }
    bool operator!=(const BitString& o) const { return !(*this == o); }

    /// Full recount of zero-bits; checked against the cache in debug builds.
    std::size_t recount_zeros() const;

    void check_zero_cache() const { assert(zeros_ == recount_zeros()); }

private:
    void set_all_ones();

    std::size_t n_;
    std::vector<std::uint64_t> words_;
    std::size_t zeros_;
};

/// Componentwise x_i >= y_i. Throws on length mismatch.
bool dominates(const BitString& x, const BitString& y);

}  // namespace dynbv
