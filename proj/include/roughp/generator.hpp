#pragma once

// Certified-sign random instance generation: draw a uniform odd-length
// string, steer its weight parity to the requested sign, map it to the base
// language through alpha. Every output is a guaranteed member (pos) or
// non-member (neg); the support is exactly the alpha-image of one parity
// class, which this module also counts, enumerates and chi-square-tests.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "roughp/bigint.hpp"
#include "roughp/iso.hpp"
#include "roughp/rng.hpp"
#include "roughp/strings.hpp"

namespace roughp {

enum class Sign { Pos, Neg };

const char* to_string(Sign s);
Sign sign_from_string(const std::string& text);

struct GenRequest {
    unsigned n = 0;
    Sign sign = Sign::Pos;
    uint64_t count = 1;
    uint64_t seed = kDefaultSeed;
};

// Source-string length for size parameter n: 4*floor(n/2) + 3, always odd.
unsigned source_length(unsigned n);

// One instance; consumes draws from rng.
SymString generate_one(const IsoEngine& engine, Sign sign, unsigned n, Rng& rng);

// The full request as a deterministic stream: same (seed, request), same
// instances, in order.
std::vector<SymString> generate(const IsoEngine& engine, const GenRequest& req);

struct VerifyOutcome {
    uint64_t verified = 0;
    uint64_t unverified = 0;            // skipped for decide length budget
    std::vector<std::size_t> mismatches;  // indices whose sign is wrong

    bool all_match() const { return mismatches.empty(); }
};

// Runs decide over each output and compares with the requested sign.
VerifyOutcome verify_outputs(const PaddableLanguage& lang, std::span<const SymString> outputs,
                             Sign sign, std::size_t decide_len_budget = 256);

// Exact number of length-m strings whose weight has the given parity
// (0 even, 1 odd), by dynamic programming over positions.
BigUint count_weight_parity(unsigned k, unsigned m, unsigned parity);

// Support size of the generator at (n, sign): the count of source strings
// of the matching parity. Checks the floor(k^m/2) and k^(2n) lower bounds.
BigUint support_size(unsigned k, unsigned n, Sign sign);

struct UniformityReport {
    unsigned n = 0;
    unsigned m = 0;
    uint64_t support = 0;  // M
    uint64_t samples = 0;
    double chi_square = 0.0;
    double p_value = 0.0;
    uint64_t min_cell = 0;
    uint64_t max_cell = 0;
    bool pass = false;
};

// Enumerates the support (must fit the budget), draws `samples` instances
// through the real generator, and chi-square-tests the tally against
// uniform. Any output outside the support, or a support smaller than the
// parity count, raises CorrectnessError.
UniformityReport uniformity_test(const IsoEngine& engine, unsigned n, Sign sign, uint64_t samples,
                                 uint64_t seed, uint64_t enum_budget = kDefaultEnumBudget);

// Exact distribution of the parity-flip step applied to a uniform draw from
// the parity class `start_parity` of the sphere of radius m: enumerates
// every (string, position, replacement) outcome with exact integer mass.
// Sum of masses is `scale`; uniformity over the opposite class means every
// string there has mass scale/M.
struct FlipDistribution {
    uint64_t scale = 0;
    std::map<SymString, uint64_t> mass;

    bool uniform() const;
};

FlipDistribution exact_flip_distribution(unsigned k, unsigned m, unsigned start_parity,
                                         uint64_t enum_budget = kDefaultEnumBudget);

struct LengthBoundsRow {
    unsigned n = 0;
    uint64_t samples = 0;
    uint64_t undersized = 0;  // |x| < n
    double observed_frac = 0.0;
    double bound = 0.0;      // k^(-n)
    double allowance = 0.0;  // 3-sigma binomial slack on top of the bound
    std::size_t max_len = 0;
    double mean_len = 0.0;
    bool pass = false;
};

struct LengthBoundsReport {
    std::vector<LengthBoundsRow> rows;
    std::optional<double> fit_exponent;  // slope of log(max_len) vs log(n)
    bool pass = false;
};

LengthBoundsReport length_bounds_check(const std::map<unsigned, std::vector<std::size_t>>& lengths_by_n,
                                       unsigned k);

struct InstanceRecord {
    SymString value;
    std::optional<bool> verified;  // absent when decide was out of budget
};

struct GenReport {
    std::string language;
    unsigned k = 2;
    unsigned n = 0;
    Sign sign = Sign::Pos;
    uint64_t seed = 0;
    std::vector<InstanceRecord> instances;
    std::size_t min_len = 0;
    std::size_t max_len = 0;
    double mean_len = 0.0;
    uint64_t undersized = 0;
    BigUint support_lower_bound;  // k^(2n)
    uint64_t verified = 0;
    uint64_t unverified = 0;
    uint64_t mismatched = 0;
};

// Generates, optionally verifies, and aggregates. decide comes from `lang`
// when verify is set; pass nullptr to skip verification entirely.
GenReport run_generation(const IsoEngine& engine, const PaddableLanguage* lang,
                         const GenRequest& req, bool verify, std::size_t decide_len_budget = 256);

}  // namespace roughp
