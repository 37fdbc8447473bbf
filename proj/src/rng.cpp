#include "roughp/rng.hpp"

#include <limits>
#include <stdexcept>

namespace roughp {

namespace {

uint64_t splitmix64(uint64_t& x) {
    uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t rotl(uint64_t v, int s) { return (v << s) | (v >> (64 - s)); }

}  // namespace

Rng::Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& s : state_) s = splitmix64(x);
}

Rng Rng::derive(uint64_t seed, uint64_t stream) {
    uint64_t x = stream;
    return Rng(seed ^ splitmix64(x));
}

uint64_t Rng::next() {
    const uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

uint64_t Rng::below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
    constexpr uint64_t kMax = std::numeric_limits<uint64_t>::max();
    const uint64_t overhang = (kMax % bound + 1) % bound;  // 2^64 mod bound
    const uint64_t limit = kMax - overhang;
    uint64_t r;
    do {
        r = next();
    } while (r > limit);
    return r % bound;
}

SymString Rng::uniform_string(unsigned k, std::size_t len) {
    std::vector<Symbol> syms(len);
    for (auto& s : syms) s = symbol(k);
    return SymString(k, std::move(syms));
}

}  // namespace roughp
