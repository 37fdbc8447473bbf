#include "roughp/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace roughp {

BigUint::BigUint(uint64_t v) {
    if (v) limbs_.push_back(static_cast<uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::pow(uint64_t base, unsigned exp) {
    BigUint r(1);
    BigUint b(base);
    while (exp) {
        // square-and-multiply via repeated mul_small would be wrong for
        // multi-limb bases; base fits u64 so do it limb-wise.
        if (exp & 1) {
            BigUint next;
            next.limbs_.assign(r.limbs_.size() + b.limbs_.size(), 0);
            for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
                uint64_t carry = 0;
                for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                    uint64_t cur = static_cast<uint64_t>(r.limbs_[i]) * b.limbs_[j] +
                                   next.limbs_[i + j] + carry;
                    next.limbs_[i + j] = static_cast<uint32_t>(cur);
                    carry = cur >> 32;
                }
                std::size_t pos = i + b.limbs_.size();
                while (carry) {
                    uint64_t cur = next.limbs_[pos] + carry;
                    next.limbs_[pos] = static_cast<uint32_t>(cur);
                    carry = cur >> 32;
                    ++pos;
                }
            }
            next.trim();
            r = std::move(next);
        }
        exp >>= 1;
        if (exp) {
            BigUint sq;
            sq.limbs_.assign(2 * b.limbs_.size(), 0);
            for (std::size_t i = 0; i < b.limbs_.size(); ++i) {
                uint64_t carry = 0;
                for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                    uint64_t cur = static_cast<uint64_t>(b.limbs_[i]) * b.limbs_[j] +
                                   sq.limbs_[i + j] + carry;
                    sq.limbs_[i + j] = static_cast<uint32_t>(cur);
                    carry = cur >> 32;
                }
                std::size_t pos = i + b.limbs_.size();
                while (carry) {
                    uint64_t cur = sq.limbs_[pos] + carry;
                    sq.limbs_[pos] = static_cast<uint32_t>(cur);
                    carry = cur >> 32;
                    ++pos;
                }
            }
            sq.trim();
            b = std::move(sq);
        }
    }
    return r;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    limbs_.resize(std::max(limbs_.size(), rhs.limbs_.size()), 0);
    uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t cur = static_cast<uint64_t>(limbs_[i]) + carry +
                       (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
        limbs_[i] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    return *this;
}

BigUint& BigUint::mul_small(uint32_t m) {
    uint64_t carry = 0;
    for (auto& limb : limbs_) {
        uint64_t cur = static_cast<uint64_t>(limb) * m + carry;
        limb = static_cast<uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    trim();
    return *this;
}

BigUint& BigUint::div_small(uint32_t d) {
    if (d == 0) throw std::invalid_argument("division by zero");
    uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return *this;
}

uint32_t BigUint::mod_small(uint32_t d) const {
    if (d == 0) throw std::invalid_argument("division by zero");
    uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        rem = ((rem << 32) | limbs_[i]) % d;
    }
    return static_cast<uint32_t>(rem);
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size()) {
        return limbs_.size() <=> rhs.limbs_.size();
    }
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::optional<uint64_t> BigUint::to_u64() const {
    if (limbs_.size() > 2) return std::nullopt;
    uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        uint32_t digit = tmp.mod_small(10);
        tmp.div_small(10);
        out.push_back(static_cast<char>('0' + digit));
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace roughp
