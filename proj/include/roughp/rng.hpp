#pragma once

#include <cstdint>

#include "roughp/strings.hpp"

namespace roughp {

inline constexpr uint64_t kDefaultSeed = 1729;

// xoshiro256** seeded through splitmix64. Same seed, same stream, on every
// platform. Ranged draws reject instead of taking a biased modulus.
class Rng {
public:
    explicit Rng(uint64_t seed);

    // Independent stream for worker `stream` of a run seeded with `seed`.
    static Rng derive(uint64_t seed, uint64_t stream);

    uint64_t next();

    // Uniform in [0, bound); bound >= 1.
    uint64_t below(uint64_t bound);

    Symbol symbol(unsigned k) { return static_cast<Symbol>(below(k)); }

    SymString uniform_string(unsigned k, std::size_t len);

private:
    uint64_t state_[4];
};

}  // namespace roughp
