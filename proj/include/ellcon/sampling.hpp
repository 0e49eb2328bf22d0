#pragma once
#include <cstdint>
#include <random>

#include "ellcon/rat.hpp"

namespace ellcon {

// independent stream per (seed, trial) so parallel trials stay reproducible
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32), 0x5eedu};
    return std::mt19937_64(sq);
}

inline Rat random_rat(std::mt19937_64& g, int num_max = 50, int den_max = 9) {
    std::uniform_int_distribution<int> n(-num_max, num_max), d(1, den_max);
    Rat r(n(g), d(g));
    r.canonicalize();
    return r;
}

inline Rat random_nonzero_rat(std::mt19937_64& g, int num_max = 50, int den_max = 9) {
    Rat r;
    do r = random_rat(g, num_max, den_max);
    while (r == 0);
    return r;
}

}  // namespace ellcon
