#pragma once

// The paddable-language plugin contract, the generic strip-prefix padding
// wrapper that turns any decidable core predicate into a paddable language,
// and the contract validator.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "roughp/strings.hpp"

namespace roughp {

using DecideFn = std::function<bool(const SymString&)>;
using PadFn = std::function<SymString(const SymString&, const SymString&)>;
using DecFn = std::function<SymString(const SymString&)>;

// Plugin record. Requirements on top of the two padding identities:
// pad and dec total and pure, |pad(x,y)| > |x| + |y|, decide(w1) true,
// decide(w0) false. decide may be expensive; callers gate it by length.
struct PaddableLanguage {
    std::string name;
    unsigned k = 2;
    DecideFn decide;
    PadFn pad;
    DecFn dec;
    SymString w0;
    SymString w1;
};

// The decide-free view of a language. The isomorphism engine and the
// heuristic are built on this type only, so they cannot reach a decider.
struct PaddingOps {
    std::string name;
    unsigned k = 2;
    PadFn pad;
    DecFn dec;
    SymString w0;
    SymString w1;

    static PaddingOps from(const PaddableLanguage& lang) {
        return PaddingOps{lang.name, lang.k, lang.pad, lang.dec, lang.w0, lang.w1};
    }
};

struct CorePredicate {
    std::string name;
    unsigned k = 2;
    std::function<bool(const SymString&)> eval;  // total and deterministic
    SymString suggested_w0;
    SymString suggested_w1;
};

// Removes leading codec blocks until none parses. strip(pad(x, y)) == strip(x)
// for the wrapper's pad, which is what makes membership padding-invariant.
SymString strip(const SymString& x);

// Language over P: membership is P.eval(strip(x)), pad(x,y) prepends
// encode_block(y), dec reads the first block (empty string when there is
// none). Throws std::invalid_argument if the suggested witnesses do not
// decide as required.
PaddableLanguage wrap_core(const CorePredicate& p);

struct InvariantResult {
    std::string name;
    bool pass = true;
    uint64_t checked = 0;
    std::optional<std::string> counterexample;
};

struct ValidationReport {
    std::string language;
    unsigned k = 0;
    unsigned exhaustive_len = 0;
    uint64_t samples = 0;
    uint64_t seed = 0;
    std::vector<InvariantResult> invariants;

    bool all_pass() const {
        for (const auto& inv : invariants) {
            if (!inv.pass) return false;
        }
        return true;
    }
};

struct ValidateOptions {
    unsigned exhaustive_len = 5;
    uint64_t samples = 200;
    uint64_t seed = 1729;
    uint64_t enum_budget = kDefaultEnumBudget;
    std::size_t decide_len_budget = 256;  // skip decide checks above this length
    unsigned sample_extra_len = 16;       // sampled pairs use lengths in (exhaustive, exhaustive+extra]
};

// Checks every PaddableLanguage invariant exhaustively for |x|,|y| <=
// exhaustive_len, then on seeded random longer pairs. A failed invariant
// always carries a concrete counterexample.
ValidationReport validate_language(const PaddableLanguage& lang, const ValidateOptions& opts);

}  // namespace roughp
