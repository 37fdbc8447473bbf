#pragma once

// Built-in core predicates. Block-list cores start with the guard pair (1,0)
// — the one aligned pair the codec can never parse — so the core itself
// survives the wrapper's strip.

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "roughp/language.hpp"
#include "roughp/strings.hpp"

namespace roughp {

struct PredicateBudgets {
    uint64_t subset_sum_max_subsets = uint64_t{1} << 20;
    unsigned cnf_max_vars = 20;
};

// Count of evals that hit a brute-force budget and degraded to false.
std::atomic<uint64_t>& budget_events();

// Guarded block-list format: (1,0) then encode_block(item)* to exhaustion.
std::optional<std::vector<SymString>> parse_block_list(const SymString& core);
SymString make_block_list(unsigned k, const std::vector<SymString>& items);

// MSB-first binary value of a nonempty 0/1 digit string; at most 63 digits.
std::optional<uint64_t> binary_value(const SymString& digits);
SymString binary_string(unsigned k, uint64_t value);

CorePredicate parity_odd_predicate(unsigned k = 2);
CorePredicate substring_11_predicate(unsigned k = 2);
CorePredicate triangle_predicate(unsigned k = 2);
CorePredicate subset_sum_predicate(unsigned k = 2, const PredicateBudgets& budgets = {});
CorePredicate cnf_sat_predicate(unsigned k = 2, const PredicateBudgets& budgets = {});

}  // namespace roughp
