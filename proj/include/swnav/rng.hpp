#pragma once

#include <cstdint>
#include <random>

namespace swnav {

/// All randomness flows through a 64-bit Mersenne Twister. Independent
/// streams (sweep sizes, replicas, worker threads) are derived from a master
/// seed and a stream id through std::seed_seq, so a run is fully determined
/// by its seed.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

/// Uniform integer in [0, n).
template <class Int>
Int uniform_index(Rng& rng, Int n)
{
    return std::uniform_int_distribution<Int>(0, n - 1)(rng);
}

inline double uniform_unit(Rng& rng)
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline bool bernoulli(Rng& rng, double p)
{
    return uniform_unit(rng) < p;
}

} // namespace swnav
