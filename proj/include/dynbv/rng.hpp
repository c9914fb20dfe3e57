#pragma once

#include <cstdint>
#include <random>

namespace dynbv {

using Rng = std::mt19937_64;

/// splitmix64 mixing step; used to derive independent seed material.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Combine a master seed with a stream index (trial number, grid cell, ...).
/// Streams are deterministic in (master, stream), so trial outcomes do not
/// depend on scheduling or thread count.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

inline Rng make_stream(std::uint64_t master, std::uint64_t stream) {
    return Rng(derive_seed(master, stream));
}

}  // namespace dynbv
