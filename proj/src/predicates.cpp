#include "roughp/predicates.hpp"

#include <algorithm>

namespace roughp {

std::atomic<uint64_t>& budget_events() {
    static std::atomic<uint64_t> counter{0};
    return counter;
}

std::optional<std::vector<SymString>> parse_block_list(const SymString& core) {
    if (core.size() < 2 || core[0] != 1 || core[1] != 0) return std::nullopt;
    std::vector<SymString> items;
    SymString rest = core.suffix_from(2);
    while (!rest.empty()) {
        auto block = decode_block(rest);
        if (!block) return std::nullopt;
        items.push_back(std::move(block->value));
        rest = std::move(block->rest);
    }
    return items;
}

SymString make_block_list(unsigned k, const std::vector<SymString>& items) {
    SymString out(k, {1, 0});
    for (const auto& item : items) out = out + encode_block(item);
    return out;
}

std::optional<uint64_t> binary_value(const SymString& digits) {
    if (digits.empty() || digits.size() > 63) return std::nullopt;
    uint64_t v = 0;
    for (Symbol s : digits.syms()) {
        if (s > 1) return std::nullopt;
        v = (v << 1) | s;
    }
    return v;
}

SymString binary_string(unsigned k, uint64_t value) {
    std::vector<Symbol> digits;
    do {
        digits.push_back(static_cast<Symbol>(value & 1));
        value >>= 1;
    } while (value);
    std::reverse(digits.begin(), digits.end());
    return SymString(k, std::move(digits));
}

CorePredicate parity_odd_predicate(unsigned k) {
    CorePredicate p;
    p.name = "parity-odd";
    p.k = k;
    p.eval = [](const SymString& core) { return weight(core) % 2 == 1; };
    p.suggested_w1 = SymString(k, {1});
    p.suggested_w0 = SymString(k, {0});
    return p;
}

CorePredicate substring_11_predicate(unsigned k) {
    CorePredicate p;
    p.name = "substring-11";
    p.k = k;
    p.eval = [](const SymString& core) {
        for (std::size_t i = 0; i + 1 < core.size(); ++i) {
            if (core[i] == 1 && core[i + 1] == 1) return true;
        }
        return false;
    };
    p.suggested_w1 = SymString(k, {1, 1});
    p.suggested_w0 = SymString(k, {0});
    return p;
}

namespace {

// Edge index e over vertices 0..v-1: pairs (i,j), j < i, numbered
// i*(i-1)/2 + j. Returns the pair, or nothing when e is out of range.
std::optional<std::pair<unsigned, unsigned>> edge_from_index(uint64_t e, unsigned vertices) {
    unsigned i = 1;
    while (static_cast<uint64_t>(i) * (i + 1) / 2 <= e) ++i;
    const uint64_t base = static_cast<uint64_t>(i) * (i - 1) / 2;
    const unsigned j = static_cast<unsigned>(e - base);
    if (i >= vertices) return std::nullopt;
    return std::make_pair(i, j);
}

std::optional<std::vector<uint64_t>> parse_int_list(const SymString& core) {
    auto items = parse_block_list(core);
    if (!items) return std::nullopt;
    std::vector<uint64_t> values;
    values.reserve(items->size());
    for (const auto& item : *items) {
        auto v = binary_value(item);
        if (!v) return std::nullopt;
        values.push_back(*v);
    }
    return values;
}

}  // namespace

CorePredicate triangle_predicate(unsigned k) {
    CorePredicate p;
    p.name = "triangle";
    p.k = k;
    p.eval = [](const SymString& core) {
        auto edges = parse_int_list(core);
        if (!edges) return false;
        const uint64_t count = edges->size();
        unsigned vertices = 0;
        while (static_cast<uint64_t>(vertices) * vertices < 2 * count) ++vertices;
        if (vertices == 0) return false;
        std::vector<std::vector<bool>> adj(vertices, std::vector<bool>(vertices, false));
        for (uint64_t e : *edges) {
            auto pair = edge_from_index(e, vertices);
            if (!pair) return false;
            adj[pair->first][pair->second] = true;
            adj[pair->second][pair->first] = true;
        }
        for (unsigned a = 0; a < vertices; ++a) {
            for (unsigned b = a + 1; b < vertices; ++b) {
                if (!adj[a][b]) continue;
                for (unsigned c = b + 1; c < vertices; ++c) {
                    if (adj[a][c] && adj[b][c]) return true;
                }
            }
        }
        return false;
    };
    // Triangle on three vertices: edge indices 0, 1, 2.
    p.suggested_w1 = make_block_list(
        k, {binary_string(k, 0), binary_string(k, 1), binary_string(k, 2)});
    p.suggested_w0 = make_block_list(k, {});
    return p;
}

CorePredicate subset_sum_predicate(unsigned k, const PredicateBudgets& budgets) {
    CorePredicate p;
    p.name = "subset-sum";
    p.k = k;
    const uint64_t max_subsets = budgets.subset_sum_max_subsets;
    p.eval = [max_subsets](const SymString& core) {
        auto values = parse_int_list(core);
        if (!values || values->empty()) return false;
        const uint64_t target = values->back();
        values->pop_back();
        const std::size_t n = values->size();
        if (n >= 63 || (uint64_t{1} << n) > max_subsets) {
            budget_events()++;
            return false;
        }
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
            unsigned __int128 sum = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (uint64_t{1} << i)) sum += (*values)[i];
            }
            if (sum == target) return true;
        }
        return false;
    };
    p.suggested_w1 = make_block_list(k, {binary_string(k, 1), binary_string(k, 1)});
    p.suggested_w0 = make_block_list(k, {binary_string(k, 1), binary_string(k, 2)});
    return p;
}

CorePredicate cnf_sat_predicate(unsigned k, const PredicateBudgets& budgets) {
    CorePredicate p;
    p.name = "cnf-sat";
    p.k = k;
    const unsigned max_vars = budgets.cnf_max_vars;
    p.eval = [max_vars](const SymString& core) {
        auto values = parse_int_list(core);
        if (!values) return false;
        // 0 separates clauses; 2v+1 is the positive, 2v+2 the negative
        // literal of variable v. No integers at all means no clauses; the
        // segment after the last separator is a clause only when nonempty.
        std::vector<std::vector<int64_t>> clauses;
        if (!values->empty()) clauses.emplace_back();
        unsigned max_var = 0;
        bool any_var = false;
        for (uint64_t lit : *values) {
            if (lit == 0) {
                clauses.emplace_back();
                continue;
            }
            const uint64_t var = (lit - 1) / 2;
            if (var > (uint64_t{1} << 30)) return false;
            max_var = std::max(max_var, static_cast<unsigned>(var));
            any_var = true;
            const bool positive = (lit % 2) == 1;
            clauses.back().push_back(positive ? static_cast<int64_t>(var) + 1
                                              : -(static_cast<int64_t>(var) + 1));
        }
        if (!clauses.empty() && clauses.back().empty()) clauses.pop_back();
        const unsigned nvars = any_var ? max_var + 1 : 0;
        if (nvars > max_vars) {
            budget_events()++;
            return false;
        }
        for (const auto& clause : clauses) {
            if (clause.empty()) return false;  // empty clause is unsatisfiable
        }
        if (clauses.empty()) return true;
        for (uint64_t assign = 0; assign < (uint64_t{1} << nvars); ++assign) {
            bool all = true;
            for (const auto& clause : clauses) {
                bool sat = false;
                for (int64_t lit : clause) {
                    const unsigned var = static_cast<unsigned>(lit > 0 ? lit : -lit) - 1;
                    const bool val = (assign >> var) & 1;
                    if ((lit > 0) == val) {
                        sat = true;
                        break;
                    }
                }
                if (!sat) {
                    all = false;
                    break;
                }
            }
            if (all) return true;
        }
        return false;
    };
    // (x0) is satisfiable; (x0) and (not x0) is not.
    p.suggested_w1 = make_block_list(k, {binary_string(k, 1)});
    p.suggested_w0 = make_block_list(
        k, {binary_string(k, 1), binary_string(k, 0), binary_string(k, 2)});
    return p;
}

}  // namespace roughp
