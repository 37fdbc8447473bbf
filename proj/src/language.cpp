#include "roughp/language.hpp"

#include <stdexcept>

#include "roughp/rng.hpp"

namespace roughp {

SymString strip(const SymString& x) {
    SymString rest = x;
    while (auto block = decode_block(rest)) {
        rest = std::move(block->rest);
    }
    return rest;
}

PaddableLanguage wrap_core(const CorePredicate& p) {
    if (!p.eval) throw std::invalid_argument("core predicate has no eval");
    if (p.suggested_w0.k() != p.k || p.suggested_w1.k() != p.k) {
        throw std::invalid_argument("witness alphabet mismatch for " + p.name);
    }
    PaddableLanguage lang;
    lang.name = p.name;
    lang.k = p.k;
    auto eval = p.eval;
    lang.decide = [eval](const SymString& x) { return eval(strip(x)); };
    lang.pad = [](const SymString& x, const SymString& y) { return encode_block(y) + x; };
    lang.dec = [](const SymString& z) {
        auto block = decode_block(z);
        return block ? block->value : SymString::lambda(z.k());
    };
    lang.w0 = p.suggested_w0;
    lang.w1 = p.suggested_w1;
    if (!lang.decide(lang.w1)) {
        throw std::invalid_argument("suggested w1 is not a member of " + p.name);
    }
    if (lang.decide(lang.w0)) {
        throw std::invalid_argument("suggested w0 is a member of " + p.name);
    }
    return lang;
}

namespace {

std::string pair_text(const SymString& x, const SymString& y) {
    return "x=\"" + x.text() + "\" y=\"" + y.text() + "\"";
}

// Total string count of the ball of radius len: sum of k^i, i <= len.
uint64_t ball_size_or_throw(unsigned k, unsigned len, uint64_t budget) {
    uint64_t total = 0;
    for (unsigned i = 0; i <= len; ++i) {
        total += require_enumerable(k, i, budget);
        if (total > budget) {
            throw BudgetError("exhaustive validation ball exceeds enumeration budget");
        }
    }
    return total;
}

}  // namespace

ValidationReport validate_language(const PaddableLanguage& lang, const ValidateOptions& opts) {
    if (!lang.decide || !lang.pad || !lang.dec) {
        throw std::invalid_argument("language " + lang.name + " is missing decide/pad/dec");
    }

    ValidationReport report;
    report.language = lang.name;
    report.k = lang.k;
    report.exhaustive_len = opts.exhaustive_len;
    report.samples = opts.samples;
    report.seed = opts.seed;

    InvariantResult dec_pad;
    dec_pad.name = "dec(pad(x,y)) == y";
    InvariantResult membership;
    membership.name = "pad(x,y) in L iff x in L";
    InvariantResult length;
    length.name = "|pad(x,y)| > |x| + |y|";
    InvariantResult totality;
    totality.name = "pad/dec total on tested domain";
    InvariantResult witnesses;
    witnesses.name = "decide(w1) and not decide(w0)";

    witnesses.checked = 2;
    if (lang.w1.k() != lang.k || lang.w0.k() != lang.k) {
        witnesses.pass = false;
        witnesses.counterexample = "witness alphabet mismatch";
    } else if (!lang.decide(lang.w1)) {
        witnesses.pass = false;
        witnesses.counterexample = "w1=\"" + lang.w1.text() + "\" not accepted";
    } else if (lang.decide(lang.w0)) {
        witnesses.pass = false;
        witnesses.counterexample = "w0=\"" + lang.w0.text() + "\" accepted";
    }

    // The pair grid is quadratic in the ball size; gate it against the budget.
    const uint64_t ball = ball_size_or_throw(lang.k, opts.exhaustive_len, opts.enum_budget);
    if (ball >= (uint64_t{1} << 31) || ball * ball > opts.enum_budget) {
        throw BudgetError("exhaustive validation needs " + std::to_string(ball) + "^2 pairs, over budget " +
                          std::to_string(opts.enum_budget));
    }

    auto check_pair = [&](const SymString& x, const SymString& y) {
        SymString padded;
        try {
            padded = lang.pad(x, y);
            totality.checked++;
        } catch (const std::exception& e) {
            if (totality.pass) {
                totality.pass = false;
                totality.counterexample = pair_text(x, y) + " pad threw: " + e.what();
            }
            return;
        }

        dec_pad.checked++;
        if (dec_pad.pass) {
            SymString decoded;
            bool threw = false;
            try {
                decoded = lang.dec(padded);
            } catch (const std::exception& e) {
                threw = true;
                if (totality.pass) {
                    totality.pass = false;
                    totality.counterexample = pair_text(x, y) + " dec threw: " + e.what();
                }
            }
            if (!threw && decoded != y) {
                dec_pad.pass = false;
                dec_pad.counterexample =
                    pair_text(x, y) + " dec(pad) = \"" + decoded.text() + "\"";
            }
        }

        length.checked++;
        if (length.pass && padded.size() <= x.size() + y.size()) {
            length.pass = false;
            length.counterexample =
                pair_text(x, y) + " |pad| = " + std::to_string(padded.size());
        }

        if (membership.pass && x.size() <= opts.decide_len_budget &&
            padded.size() <= opts.decide_len_budget) {
            membership.checked++;
            if (lang.decide(padded) != lang.decide(x)) {
                membership.pass = false;
                membership.counterexample = pair_text(x, y) + " membership changed under pad";
            }
        }
    };

    for_each_in_ball(lang.k, opts.exhaustive_len, opts.enum_budget, [&](const SymString& x) {
        for_each_in_ball(lang.k, opts.exhaustive_len, opts.enum_budget,
                         [&](const SymString& y) { check_pair(x, y); });
    });

    Rng rng(opts.seed);
    for (uint64_t i = 0; i < opts.samples; ++i) {
        const std::size_t lx =
            opts.exhaustive_len + 1 + rng.below(opts.sample_extra_len);
        const std::size_t ly =
            opts.exhaustive_len + 1 + rng.below(opts.sample_extra_len);
        check_pair(rng.uniform_string(lang.k, lx), rng.uniform_string(lang.k, ly));
    }

    report.invariants = {dec_pad, membership, length, totality, witnesses};
    return report;
}

}  // namespace roughp
