#pragma once

// The errorless heuristic over the isomorphic encoding, and the scanner
// that measures its failure rate on alpha-spheres against the exact
// symmetric-string count.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "roughp/bigint.hpp"
#include "roughp/iso.hpp"
#include "roughp/rng.hpp"
#include "roughp/stats.hpp"
#include "roughp/strings.hpp"

namespace roughp {

enum class Decision { Accept, Reject, Unknown };

const char* to_string(Decision d);

// Accept when phi(x) has odd weight, Reject when even and asymmetric,
// Unknown when symmetric. Decides membership without ever seeing a decider.
Decision classify(const IsoEngine& engine, const SymString& x);

// k^(-n/2); exact at even n, where it is a dyadic/odd-power rational.
double failure_bound(unsigned n, unsigned k);

enum class ScanMode { Exhaustive, Sample };

struct FailureStats {
    unsigned n = 0;
    BigUint sphere_size;
    ScanMode mode = ScanMode::Exhaustive;
    uint64_t evaluated = 0;
    uint64_t failures = 0;
    double rate = 0.0;
    double bound = 0.0;
    std::optional<Interval> ci;  // Wilson 95%, sample mode only
    uint64_t correctness_checked = 0;
};

struct ScanOptions {
    ScanMode mode = ScanMode::Exhaustive;
    uint64_t samples = 10000;  // sample mode only
    uint64_t seed = kDefaultSeed;
    bool check_correctness = false;
    DecideFn decide;  // required when check_correctness is set
    std::size_t decide_len_budget = 256;
    uint64_t enum_budget = kDefaultEnumBudget;
    unsigned threads = 1;  // exhaustive mode partitions the sphere
};

// Walks z over the sphere of radius n and classifies alpha(z), i.e. the
// alpha-sphere member whose preimage is z. Exhaustive mode additionally
// asserts the exact failure law (k^(n/2) for even n, none for odd n) and,
// with check_correctness, that Accept/Reject agree with decide; breaches
// raise CorrectnessError with the witness.
FailureStats scan_alpha_sphere(const IsoEngine& engine, unsigned n, const ScanOptions& opts);

}  // namespace roughp
