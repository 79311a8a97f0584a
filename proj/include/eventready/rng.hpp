#ifndef EVENTREADY_RNG_HPP
#define EVENTREADY_RNG_HPP

#include <cstdint>

namespace eventready {

/// splitmix64 step (Steele, Lea, Flood 2014); used to derive independent
/// per-chunk seeds from one user seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
    std::uint64_t state = seed ^ (0x9e3779b97f4a7c15ULL * (chunk + 1));
    std::uint64_t out = splitmix64(state);
    out ^= splitmix64(state);
    return out;
}

/// Name recorded next to every tally so a run can be reproduced.
inline const char* generator_name() { return "mt19937_64/splitmix64-chunks"; }

}  // namespace eventready

#endif
