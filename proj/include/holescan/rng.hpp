#pragma once

#include <cstdint>
#include <random>

namespace holescan {

/// splitmix64; used to derive independent seeds from a master seed.
inline uint64_t mix_seed(uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline uint64_t mix_seed(uint64_t a, uint64_t b) { return mix_seed(a ^ mix_seed(b)); }
inline uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c) { return mix_seed(mix_seed(a, b), c); }

/// Deterministic RNG. Wraps mt19937_64 but maps to doubles/ints itself:
/// std::uniform_*_distribution is implementation-defined, this is not.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, bound).
    uint64_t uniform_int(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

private:
    std::mt19937_64 engine_;
};

}  // namespace holescan
