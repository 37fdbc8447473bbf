#include <doctest.h>

#include "roughp/bigint.hpp"
#include "roughp/rng.hpp"

using namespace roughp;

TEST_CASE("small values round trip") {
    CHECK(BigUint(0).to_string() == "0");
    CHECK(BigUint(0).is_zero());
    CHECK(BigUint(1234567890123456789ULL).to_string() == "1234567890123456789");
    CHECK(*BigUint(42).to_u64() == 42);
}

TEST_CASE("pow matches u64 arithmetic in range") {
    for (uint64_t base : {2ULL, 3ULL, 7ULL, 10ULL}) {
        uint64_t expect = 1;
        for (unsigned exp = 0; exp < 20; ++exp) {
            CHECK(*BigUint::pow(base, exp).to_u64() == expect);
            expect *= base;
        }
    }
}

TEST_CASE("pow beyond u64 prints the right decimal") {
    // 2^100 and 10^25, both well known.
    CHECK(BigUint::pow(2, 100).to_string() == "1267650600228229401496703205376");
    CHECK(BigUint::pow(10, 25).to_string() == "10000000000000000000000000");
    CHECK_FALSE(BigUint::pow(2, 100).to_u64().has_value());
}

TEST_CASE("addition and small multiplication match u64 reference") {
    Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        const uint64_t a = rng.below(uint64_t{1} << 31);
        const uint64_t b = rng.below(uint64_t{1} << 31);
        const uint32_t m = static_cast<uint32_t>(rng.below(1 << 16));
        BigUint big(a);
        big += BigUint(b);
        CHECK(*big.to_u64() == a + b);
        big = BigUint(a);
        big.mul_small(m);
        CHECK(*big.to_u64() == a * m);
        if (m != 0) {
            big = BigUint(a);
            big.div_small(m);
            CHECK(*big.to_u64() == a / m);
            CHECK(BigUint(a).mod_small(m) == a % m);
        }
    }
}

TEST_CASE("comparison is numeric") {
    CHECK(BigUint(5) < BigUint(7));
    CHECK(BigUint::pow(2, 64) > BigUint(UINT64_MAX));
    CHECK(BigUint::pow(2, 10) == BigUint(1024));
    CHECK(BigUint(0) < BigUint(1));
}
