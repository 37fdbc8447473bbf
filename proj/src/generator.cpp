#include "roughp/generator.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "roughp/stats.hpp"

namespace roughp {

const char* to_string(Sign s) { return s == Sign::Pos ? "pos" : "neg"; }

Sign sign_from_string(const std::string& text) {
    if (text == "pos") return Sign::Pos;
    if (text == "neg") return Sign::Neg;
    throw std::invalid_argument("sign must be pos or neg, got \"" + text + "\"");
}

unsigned source_length(unsigned n) { return 4 * (n / 2) + 3; }

namespace {

unsigned parity_for(Sign sign) { return sign == Sign::Pos ? 1u : 0u; }

// Replace the symbol at `pos` by a uniform symbol of the opposite parity;
// rejection sampling over the alphabet, plain complement for k = 2.
void flip_parity_at(std::vector<Symbol>& syms, std::size_t pos, unsigned k, Rng& rng) {
    const unsigned old_parity = syms[pos] % 2;
    if (k == 2) {
        syms[pos] ^= 1;
        return;
    }
    Symbol repl;
    do {
        repl = rng.symbol(k);
    } while (repl % 2 == old_parity);
    syms[pos] = repl;
}

}  // namespace

SymString generate_one(const IsoEngine& engine, Sign sign, unsigned n, Rng& rng) {
    const unsigned k = engine.k();
    const unsigned m = source_length(n);
    std::vector<Symbol> syms(m);
    for (auto& s : syms) s = rng.symbol(k);

    uint64_t w = std::accumulate(syms.begin(), syms.end(), uint64_t{0});
    if (w % 2 != parity_for(sign)) {
        const std::size_t pos = static_cast<std::size_t>(rng.below(m));
        flip_parity_at(syms, pos, k, rng);
    }
    // m is odd, so the source is never symmetric: membership in the
    // auxiliary language is exactly its weight parity.
    return engine.alpha(SymString(k, std::move(syms)));
}

std::vector<SymString> generate(const IsoEngine& engine, const GenRequest& req) {
    Rng rng(req.seed);
    std::vector<SymString> out;
    out.reserve(req.count);
    for (uint64_t i = 0; i < req.count; ++i) {
        out.push_back(generate_one(engine, req.sign, req.n, rng));
    }
    return out;
}

VerifyOutcome verify_outputs(const PaddableLanguage& lang, std::span<const SymString> outputs,
                             Sign sign, std::size_t decide_len_budget) {
    VerifyOutcome outcome;
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        if (outputs[i].size() > decide_len_budget) {
            outcome.unverified++;
            continue;
        }
        const bool member = lang.decide(outputs[i]);
        outcome.verified++;
        if (member != (sign == Sign::Pos)) outcome.mismatches.push_back(i);
    }
    return outcome;
}

BigUint count_weight_parity(unsigned k, unsigned m, unsigned parity) {
    if (parity > 1) throw std::invalid_argument("parity must be 0 or 1");
    const uint32_t even_symbols = (k + 1) / 2;
    const uint32_t odd_symbols = k / 2;
    BigUint even(1), odd(0);
    for (unsigned i = 0; i < m; ++i) {
        BigUint next_even = even;
        next_even.mul_small(even_symbols);
        BigUint odd_contrib = odd;
        odd_contrib.mul_small(odd_symbols);
        next_even += odd_contrib;

        BigUint next_odd = even;
        next_odd.mul_small(odd_symbols);
        BigUint even_contrib = odd;
        even_contrib.mul_small(even_symbols);
        next_odd += even_contrib;

        even = std::move(next_even);
        odd = std::move(next_odd);
    }
    return parity == 0 ? even : odd;
}

BigUint support_size(unsigned k, unsigned n, Sign sign) {
    const unsigned m = source_length(n);
    BigUint count = count_weight_parity(k, m, parity_for(sign));

    BigUint half_sphere = BigUint::pow(k, m);
    half_sphere.div_small(2);
    if (count < half_sphere) {
        throw CorrectnessError("parity class of sphere m=" + std::to_string(m) +
                                   " smaller than floor(k^m/2)",
                               "");
    }
    if (count < BigUint::pow(k, 2 * n)) {
        throw CorrectnessError("support at n=" + std::to_string(n) + " below k^(2n)", "");
    }
    return count;
}

UniformityReport uniformity_test(const IsoEngine& engine, unsigned n, Sign sign, uint64_t samples,
                                 uint64_t seed, uint64_t enum_budget) {
    if (samples == 0) throw std::invalid_argument("uniformity test needs samples");
    const unsigned k = engine.k();
    const unsigned m = source_length(n);
    const unsigned parity = parity_for(sign);

    // Enumerate the support as the alpha-image of the matching parity class;
    // alpha is injective, so the image count must equal the class count.
    std::map<SymString, uint64_t> tally;
    for_each_in_sphere(k, m, enum_budget, [&](const SymString& z) {
        if (weight(z) % 2 == parity) tally.emplace(engine.alpha(z), 0);
    });
    const auto expected_support = support_size(k, n, sign).to_u64();
    if (!expected_support || tally.size() != *expected_support) {
        throw CorrectnessError("alpha is not injective on the generator support at n=" +
                                   std::to_string(n),
                               "");
    }

    Rng rng(seed);
    for (uint64_t i = 0; i < samples; ++i) {
        const SymString x = generate_one(engine, sign, n, rng);
        auto it = tally.find(x);
        if (it == tally.end()) {
            throw CorrectnessError("generated instance outside the expected support", x.text());
        }
        it->second++;
    }

    UniformityReport report;
    report.n = n;
    report.m = m;
    report.support = tally.size();
    report.samples = samples;
    const double expected = static_cast<double>(samples) / static_cast<double>(tally.size());
    double chi2 = 0.0;
    uint64_t min_cell = samples, max_cell = 0;
    for (const auto& [value, count] : tally) {
        const double d = static_cast<double>(count) - expected;
        chi2 += d * d / expected;
        min_cell = std::min(min_cell, count);
        max_cell = std::max(max_cell, count);
    }
    report.chi_square = chi2;
    report.p_value = chi_square_p_value(chi2, static_cast<unsigned>(tally.size() - 1));
    report.min_cell = min_cell;
    report.max_cell = max_cell;
    report.pass = report.p_value >= 0.001;
    return report;
}

bool FlipDistribution::uniform() const {
    if (mass.empty()) return false;
    if (scale % mass.size() != 0) return false;
    const uint64_t share = scale / mass.size();
    for (const auto& [value, m] : mass) {
        if (m != share) return false;
    }
    return true;
}

FlipDistribution exact_flip_distribution(unsigned k, unsigned m, unsigned start_parity,
                                         uint64_t enum_budget) {
    if (start_parity > 1) throw std::invalid_argument("parity must be 0 or 1");
    const uint32_t even_symbols = (k + 1) / 2;
    const uint32_t odd_symbols = k / 2;
    // Per-outcome probability is 1/(|class| * m * eligible); scale by
    // |class| * m * lcm so every outcome carries an exact integer mass.
    const uint64_t lcm = std::lcm<uint64_t>(even_symbols, odd_symbols);

    FlipDistribution dist;
    uint64_t class_size = 0;
    for_each_in_sphere(k, m, enum_budget, [&](const SymString& z) {
        if (weight(z) % 2 != start_parity) return;
        ++class_size;
        for (std::size_t pos = 0; pos < z.size(); ++pos) {
            const unsigned old_parity = z[pos] % 2;
            const uint64_t eligible = old_parity == 0 ? odd_symbols : even_symbols;
            const uint64_t mass_per = lcm / eligible;
            for (Symbol repl = 0; repl < k; ++repl) {
                if (repl % 2 == old_parity) continue;
                dist.mass[z.with_symbol(pos, repl)] += mass_per;
            }
        }
    });
    dist.scale = class_size * m * lcm;
    return dist;
}

LengthBoundsReport length_bounds_check(
    const std::map<unsigned, std::vector<std::size_t>>& lengths_by_n, unsigned k) {
    LengthBoundsReport report;
    report.pass = true;
    std::vector<std::pair<double, double>> fit_points;
    for (const auto& [n, lengths] : lengths_by_n) {
        LengthBoundsRow row;
        row.n = n;
        row.samples = lengths.size();
        row.bound = std::pow(static_cast<double>(k), -static_cast<double>(n));
        uint64_t total_len = 0;
        for (std::size_t len : lengths) {
            if (len < n) row.undersized++;
            row.max_len = std::max(row.max_len, len);
            total_len += len;
        }
        if (!lengths.empty()) {
            row.observed_frac =
                static_cast<double>(row.undersized) / static_cast<double>(lengths.size());
            row.mean_len = static_cast<double>(total_len) / static_cast<double>(lengths.size());
            row.allowance = 3.0 * std::sqrt(row.bound * (1.0 - row.bound) /
                                            static_cast<double>(lengths.size()));
        }
        row.pass = row.observed_frac <= row.bound + row.allowance;
        report.pass = report.pass && row.pass;
        if (n >= 1 && row.max_len > 0) {
            fit_points.emplace_back(static_cast<double>(n), static_cast<double>(row.max_len));
        }
        report.rows.push_back(row);
    }
    if (fit_points.size() >= 2) {
        report.fit_exponent = loglog_slope(fit_points);
    }
    return report;
}

GenReport run_generation(const IsoEngine& engine, const PaddableLanguage* lang,
                         const GenRequest& req, bool verify, std::size_t decide_len_budget) {
    if (verify && lang == nullptr) {
        throw std::invalid_argument("verification needs the language's decider");
    }
    GenReport report;
    report.language = engine.language_name();
    report.k = engine.k();
    report.n = req.n;
    report.sign = req.sign;
    report.seed = req.seed;
    report.support_lower_bound = BigUint::pow(engine.k(), 2 * req.n);

    const std::vector<SymString> outputs = generate(engine, req);
    report.instances.reserve(outputs.size());

    uint64_t total_len = 0;
    report.min_len = outputs.empty() ? 0 : outputs.front().size();
    for (const auto& x : outputs) {
        InstanceRecord rec{x, std::nullopt};
        if (verify) {
            if (x.size() <= decide_len_budget) {
                const bool member = lang->decide(x);
                rec.verified = member == (req.sign == Sign::Pos);
                if (*rec.verified) {
                    report.verified++;
                } else {
                    report.mismatched++;
                }
            } else {
                report.unverified++;
            }
        }
        total_len += x.size();
        report.min_len = std::min(report.min_len, x.size());
        report.max_len = std::max(report.max_len, x.size());
        if (x.size() < req.n) report.undersized++;
        report.instances.push_back(std::move(rec));
    }
    if (!outputs.empty()) {
        report.mean_len = static_cast<double>(total_len) / static_cast<double>(outputs.size());
    }
    return report;
}

}  // namespace roughp
