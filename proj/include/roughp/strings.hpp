#pragma once

// Strings over a k-ary alphabet {0,...,k-1}: weight, symmetry, lexicographic
// sphere enumeration with contiguous partitioning, and the self-delimiting
// block codec used by the padding wrapper.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "roughp/errors.hpp"

namespace roughp {

using Symbol = uint32_t;

inline constexpr uint64_t kDefaultEnumBudget = uint64_t{1} << 22;

class Alphabet {
public:
    explicit Alphabet(unsigned size);
    unsigned size() const noexcept { return size_; }

private:
    unsigned size_;
};

class SymString {
public:
    // Default value is the empty string over the binary alphabet.
    SymString() : k_(2) {}
    SymString(unsigned k, std::vector<Symbol> syms);

    static SymString lambda(unsigned k) { return SymString(k, {}); }

    // Textual form: one digit per symbol for k <= 10, comma-separated
    // decimal otherwise. Empty text parses to the empty string.
    static SymString parse(unsigned k, std::string_view text);
    std::string text() const;

    unsigned k() const noexcept { return k_; }
    std::size_t size() const noexcept { return syms_.size(); }
    bool empty() const noexcept { return syms_.empty(); }
    Symbol at(std::size_t i) const { return syms_.at(i); }
    Symbol operator[](std::size_t i) const { return syms_[i]; }
    const std::vector<Symbol>& syms() const noexcept { return syms_; }

    SymString concat(const SymString& other) const;
    SymString substr(std::size_t pos, std::size_t len) const;
    SymString suffix_from(std::size_t pos) const { return substr(pos, syms_.size() - pos); }

    // Functional update; value stays immutable.
    SymString with_symbol(std::size_t pos, Symbol s) const;

    friend bool operator==(const SymString&, const SymString&) = default;
    friend auto operator<=>(const SymString&, const SymString&) = default;

private:
    unsigned k_;
    std::vector<Symbol> syms_;
};

SymString operator+(const SymString& a, const SymString& b);

// Sum of the symbol values; the empty string has weight 0.
uint64_t weight(const SymString& x);

// True iff x = uu for some u; the empty string is symmetric (u = empty).
bool is_symmetric(const SymString& x);

// The u with x = uu; only valid when is_symmetric(x).
SymString first_half(const SymString& x);

// --- block codec ---------------------------------------------------------
//
// encode_block(y) doubles every symbol of y and appends the terminator pair
// (0,1). Decoding reads aligned pairs from the left: (a,a) contributes a,
// (0,1) ends the block, anything else is not a block. Total inverse:
// decode_block(encode_block(y) ++ r) == (y, r) for all y, r.

SymString encode_block(const SymString& y);

struct DecodedBlock {
    SymString value;
    SymString rest;
};

std::optional<DecodedBlock> decode_block(const SymString& z);

// --- sphere enumeration ---------------------------------------------------

// k^n if it fits in 63 bits, nullopt otherwise.
std::optional<uint64_t> sphere_size_u64(unsigned k, unsigned n);

// k^n, or a BudgetError naming the offending sphere.
uint64_t require_enumerable(unsigned k, unsigned n, uint64_t budget);

// The idx-th string of the sphere in lexicographic order.
SymString sphere_string_at(unsigned k, unsigned n, uint64_t idx);

namespace detail {
inline bool increment_odometer(std::vector<Symbol>& digits, unsigned k) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < k) return true;
        digits[i] = 0;
    }
    return false;
}
}  // namespace detail

// Visits chunk `part` of `parts` disjoint contiguous chunks of the sphere of
// radius n, in lexicographic order. part/parts = 0/1 visits everything.
template <typename Fn>
void for_each_in_sphere_part(unsigned k, unsigned n, uint64_t part, uint64_t parts,
                             uint64_t budget, Fn&& fn) {
    if (parts == 0 || part >= parts) {
        throw std::invalid_argument("sphere partition index out of range");
    }
    const uint64_t total = require_enumerable(k, n, budget);
    const uint64_t lo = static_cast<uint64_t>((static_cast<unsigned __int128>(total) * part) / parts);
    const uint64_t hi = static_cast<uint64_t>((static_cast<unsigned __int128>(total) * (part + 1)) / parts);
    if (lo >= hi) return;
    std::vector<Symbol> digits = sphere_string_at(k, n, lo).syms();
    for (uint64_t i = lo; i < hi; ++i) {
        fn(SymString(k, digits));
        detail::increment_odometer(digits, k);
    }
}

template <typename Fn>
void for_each_in_sphere(unsigned k, unsigned n, uint64_t budget, Fn&& fn) {
    for_each_in_sphere_part(k, n, 0, 1, budget, std::forward<Fn>(fn));
}

// All strings of length <= max_len, shortest first, each sphere lexicographic.
template <typename Fn>
void for_each_in_ball(unsigned k, unsigned max_len, uint64_t budget, Fn&& fn) {
    for (unsigned n = 0; n <= max_len; ++n) {
        for_each_in_sphere(k, n, budget, fn);
    }
}

}  // namespace roughp
