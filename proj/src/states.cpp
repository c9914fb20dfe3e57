#include "dynbv/states.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dynbv {

StateSpec StateSpec::degenerate(std::size_t n, std::size_t m) {
    return {Kind::degenerate, 0, 0, n, m};
}

StateSpec StateSpec::F(long r, std::size_t n, std::size_t m) {
    if (r < 1) throw std::invalid_argument("F(r) needs r >= 1");
    return {Kind::f, r, 0, n, m};
}

StateSpec StateSpec::A(long r, long k, std::size_t n, std::size_t m) {
    if (r < 1 || k < 1) throw std::invalid_argument("A(r,k) needs r,k >= 1");
    return {Kind::a, r, k, n, m};
}

StateSpec StateSpec::B(long r, long k, std::size_t n, std::size_t m) {
    if (r < 1 || k < 1) throw std::invalid_argument("B(r,k) needs r,k >= 1");
    return {Kind::b, r, k, n, m};
}

namespace {

class DisjointSampler {
public:
    DisjointSampler(const BitString& x0, Rng& rng) : x0_(x0), rng_(rng) {
        zeros_.reserve(x0.zero_count());
        auto words = x0.words();
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t z = ~words[w];
            if (w == words.size() - 1 && (x0.size() & 63))
                z &= (1ULL << (x0.size() & 63)) - 1;
            while (z) {
                zeros_.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(z)));
                z &= z - 1;
            }
        }
    }

    // an unused position that is a zero-bit / one-bit of x^0
    std::uint32_t draw(bool want_zero) {
        if (want_zero) {
            std::uniform_int_distribution<std::size_t> d(0, zeros_.size() - 1);
            std::size_t i = d(rng_);
            std::uint32_t p = zeros_[i];
            zeros_[i] = zeros_.back();
            zeros_.pop_back();
            used_.push_back(p);
            return p;
        }
        std::uniform_int_distribution<std::uint32_t> pos(
            0, static_cast<std::uint32_t>(x0_.size() - 1));
        while (true) {
            std::uint32_t p = pos(rng_);
            if (!x0_.bit(p)) continue;
            if (std::find(used_.begin(), used_.end(), p) != used_.end()) continue;
            used_.push_back(p);
            return p;
        }
    }

private:
    const BitString& x0_;
    Rng& rng_;
    std::vector<std::uint32_t> zeros_;
    std::vector<std::uint32_t> used_;
};

}  // namespace

ConstructedState construct_state(const StateSpec& spec, std::size_t mu, Rng& rng) {
    if (mu < 1) throw std::invalid_argument("mu must be >= 1");
    if (spec.m > spec.n) throw std::invalid_argument("zero count exceeds n");
    const long extra_zeros = (spec.kind == StateSpec::Kind::degenerate) ? 0
                             : (spec.kind == StateSpec::Kind::f)        ? spec.r
                                                                 : spec.r + spec.k;
    if (static_cast<long>(spec.n - spec.m) < extra_zeros)
        throw std::invalid_argument("not enough one-bits for the requested state");
    const int flipped_zero_bits = spec.kind == StateSpec::Kind::degenerate ? 0
                                  : spec.kind == StateSpec::Kind::f        ? 1
                                                                           : 2;
    if (spec.m < static_cast<std::size_t>(flipped_zero_bits))
        throw std::invalid_argument("x^0 has too few zero-bits for the requested state");

    BitString x0 = BitString::with_zero_count(spec.n, spec.m, rng);
    ConstructedState out;
    out.reference_zero_count = spec.m;

    if (spec.kind == StateSpec::Kind::degenerate) {
        out.pop = Population(mu, x0);
        return out;
    }

    DisjointSampler sampler(x0, rng);
    BitString x1r = x0;  // x^(1-r)
    x1r.flip(sampler.draw(/*want_zero=*/true));
    for (long i = 0; i < spec.r; ++i) x1r.flip(sampler.draw(false));

    if (spec.kind == StateSpec::Kind::f) {
        std::vector<BitString> members(mu - 1, x0);
        members.push_back(std::move(x1r));
        out.pop = Population(std::move(members));
        return out;
    }

    if (mu != 2)
        throw std::invalid_argument("A/B states are defined for mu = 2");
    BitString third = spec.kind == StateSpec::Kind::a ? x0 : x1r;  // x^(1-k) or x^(2-r-k)
    third.flip(sampler.draw(true));
    for (long i = 0; i < spec.k; ++i) third.flip(sampler.draw(false));

    std::vector<BitString> members;
    members.reserve(3);
    members.push_back(std::move(x0));
    members.push_back(std::move(x1r));
    members.push_back(std::move(third));
    out.pop = Population(std::move(members));
    out.pre_selection = true;
    return out;
}

}  // namespace dynbv
