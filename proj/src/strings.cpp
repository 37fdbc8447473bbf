#include "roughp/strings.hpp"

#include <charconv>
#include <stdexcept>

namespace roughp {

Alphabet::Alphabet(unsigned size) : size_(size) {
    if (size < 2) throw std::invalid_argument("alphabet needs at least two symbols");
}

SymString::SymString(unsigned k, std::vector<Symbol> syms) : k_(k), syms_(std::move(syms)) {
    if (k_ < 2) throw std::invalid_argument("alphabet needs at least two symbols");
    for (Symbol s : syms_) {
        if (s >= k_) {
            throw std::invalid_argument("symbol " + std::to_string(s) +
                                        " out of range for alphabet of size " + std::to_string(k_));
        }
    }
}

SymString SymString::parse(unsigned k, std::string_view text) {
    std::vector<Symbol> syms;
    if (k <= 10) {
        syms.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument(std::string("invalid symbol character '") + c + "'");
            }
            syms.push_back(static_cast<Symbol>(c - '0'));
        }
    } else if (!text.empty()) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                    : comma - pos);
            Symbol v = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || p != tok.data() + tok.size()) {
                throw std::invalid_argument("invalid symbol token '" + std::string(tok) + "'");
            }
            syms.push_back(v);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    return SymString(k, std::move(syms));
}

std::string SymString::text() const {
    std::string out;
    if (k_ <= 10) {
        out.reserve(syms_.size());
        for (Symbol s : syms_) out.push_back(static_cast<char>('0' + s));
    } else {
        for (std::size_t i = 0; i < syms_.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(syms_[i]);
        }
    }
    return out;
}

SymString SymString::concat(const SymString& other) const {
    if (k_ != other.k_) throw std::invalid_argument("cannot concatenate strings over different alphabets");
    std::vector<Symbol> syms = syms_;
    syms.insert(syms.end(), other.syms_.begin(), other.syms_.end());
    return SymString(k_, std::move(syms));
}

SymString SymString::substr(std::size_t pos, std::size_t len) const {
    if (pos > syms_.size() || len > syms_.size() - pos) {
        throw std::out_of_range("substring range out of bounds");
    }
    return SymString(k_, std::vector<Symbol>(syms_.begin() + static_cast<std::ptrdiff_t>(pos),
                                             syms_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

SymString SymString::with_symbol(std::size_t pos, Symbol s) const {
    std::vector<Symbol> syms = syms_;
    syms.at(pos) = s;
    return SymString(k_, std::move(syms));
}

SymString operator+(const SymString& a, const SymString& b) { return a.concat(b); }

uint64_t weight(const SymString& x) {
    uint64_t w = 0;
    for (Symbol s : x.syms()) w += s;
    return w;
}

bool is_symmetric(const SymString& x) {
    const std::size_t n = x.size();
    if (n % 2 != 0) return false;
    const auto& s = x.syms();
    for (std::size_t i = 0; i < n / 2; ++i) {
        if (s[i] != s[i + n / 2]) return false;
    }
    return true;
}

SymString first_half(const SymString& x) {
    if (!is_symmetric(x)) throw std::invalid_argument("first_half of an asymmetric string");
    return x.substr(0, x.size() / 2);
}

SymString encode_block(const SymString& y) {
    std::vector<Symbol> out;
    out.reserve(2 * y.size() + 2);
    for (Symbol s : y.syms()) {
        out.push_back(s);
        out.push_back(s);
    }
    out.push_back(0);
    out.push_back(1);
    return SymString(y.k(), std::move(out));
}

std::optional<DecodedBlock> decode_block(const SymString& z) {
    std::vector<Symbol> value;
    const auto& s = z.syms();
    for (std::size_t i = 0; i + 1 < s.size(); i += 2) {
        const Symbol a = s[i];
        const Symbol b = s[i + 1];
        if (a == 0 && b == 1) {
            return DecodedBlock{SymString(z.k(), std::move(value)), z.suffix_from(i + 2)};
        }
        if (a != b) return std::nullopt;
        value.push_back(a);
    }
    return std::nullopt;  // exhausted without a terminator
}

std::optional<uint64_t> sphere_size_u64(unsigned k, unsigned n) {
    constexpr uint64_t kLimit = uint64_t{1} << 63;
    uint64_t v = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (v > (kLimit - 1) / k) return std::nullopt;
        v *= k;
    }
    return v;
}

uint64_t require_enumerable(unsigned k, unsigned n, uint64_t budget) {
    const auto size = sphere_size_u64(k, n);
    if (!size || *size > budget) {
        throw BudgetError("sphere k=" + std::to_string(k) + " n=" + std::to_string(n) +
                          " exceeds enumeration budget " + std::to_string(budget));
    }
    return *size;
}

SymString sphere_string_at(unsigned k, unsigned n, uint64_t idx) {
    std::vector<Symbol> digits(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        digits[i] = static_cast<Symbol>(idx % k);
        idx /= k;
    }
    if (idx != 0) throw std::out_of_range("sphere index out of range");
    return SymString(k, std::move(digits));
}

}  // namespace roughp
