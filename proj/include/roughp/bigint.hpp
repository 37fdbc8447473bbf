#pragma once

// Minimal unsigned big integer, just enough for exact sphere and support
// counting (k^n, parity DP) at any desk-scale n.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace roughp {

class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v);  // NOLINT(google-explicit-constructor): numeric literal convenience

    static BigUint pow(uint64_t base, unsigned exp);

    BigUint& operator+=(const BigUint& rhs);
    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

    BigUint& mul_small(uint32_t m);
    BigUint& div_small(uint32_t d);  // floor division
    uint32_t mod_small(uint32_t d) const;

    std::strong_ordering operator<=>(const BigUint& rhs) const;
    bool operator==(const BigUint& rhs) const { return limbs_ == rhs.limbs_; }

    bool is_zero() const noexcept { return limbs_.empty(); }
    std::optional<uint64_t> to_u64() const;
    std::string to_string() const;

private:
    void trim();
    std::vector<uint32_t> limbs_;  // little-endian base 2^32; empty means 0
};

}  // namespace roughp
