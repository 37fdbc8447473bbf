// Acceptance suite: one line per criterion, exit 0 only if all pass.
//
// 1 exact failure law on alpha-spheres, binary wrapper, n = 0..16
// 2 errorlessness against decide over the same region
// 3 bijection of phi/alpha, exhaustive + random long strings, k = 2 and 3
// 4 paddability contract of all five built-in languages
// 5 certified signs: 1000 pos + 1000 neg per n in 1..8 per language
// 6 support size and chi-square uniformity, plus the exact flip oracle
// 7 length bounds with 3-sigma slack, polynomial fit reported
// 8 purity: phi/alpha/classify never consult a decider

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "roughp/generator.hpp"
#include "roughp/heuristic.hpp"
#include "roughp/iso.hpp"
#include "roughp/predicates.hpp"
#include "roughp/registry.hpp"
#include "roughp/rng.hpp"

using namespace roughp;

namespace {

int failures_total = 0;

struct Criterion {
    Criterion(int id_, const char* label_) : id(id_), label(label_) {}

    int id;
    const char* label;
    std::vector<std::string> problems;
    std::vector<std::string> notes;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void fail(std::string what) { problems.push_back(std::move(what)); }
    void note(std::string what) { notes.push_back(std::move(what)); }

    void finish() {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        if (problems.empty()) {
            std::printf("PASS  criterion %d: %s  (%.1fs)\n", id, label, secs);
        } else {
            failures_total++;
            std::printf("FAIL  criterion %d: %s  (%.1fs)\n", id, label, secs);
            for (const auto& p : problems) std::printf("      %s\n", p.c_str());
        }
        for (const auto& n : notes) std::printf("      note: %s\n", n.c_str());
    }
};

IsoEngine parity_engine(unsigned k = 2) {
    return IsoEngine(wrap_core(parity_odd_predicate(k)));
}

void criterion_1_exact_failure_law() {
    Criterion c{1, "exact failure law, parity-odd k=2, exhaustive n=0..16"};
    try {
        const IsoEngine engine = parity_engine();
        ScanOptions opts;
        opts.threads = 2;
        for (unsigned n = 0; n <= 16; ++n) {
            const FailureStats stats = scan_alpha_sphere(engine, n, opts);
            const uint64_t expected = n % 2 == 0 ? (uint64_t{1} << (n / 2)) : 0;
            if (stats.failures != expected) {
                c.fail("n=" + std::to_string(n) + ": failures " + std::to_string(stats.failures) +
                       " != " + std::to_string(expected));
            }
            if (n % 2 == 0 && stats.rate != stats.bound) {
                c.fail("n=" + std::to_string(n) + ": rate != bound at even radius");
            }
            if (n % 2 == 1 && stats.failures != 0) {
                c.fail("n=" + std::to_string(n) + ": unexpected failures at odd radius");
            }
        }
    } catch (const std::exception& e) {
        c.fail(e.what());
    }
    c.finish();
}

void criterion_2_errorlessness() {
    Criterion c{2, "errorlessness: accept/reject never contradict decide, n=0..16"};
    try {
        const PaddableLanguage lang = wrap_core(parity_odd_predicate());
        const IsoEngine engine(lang);
        ScanOptions opts;
        opts.check_correctness = true;
        opts.decide = lang.decide;
        opts.threads = 2;
        for (unsigned n = 0; n <= 16; ++n) {
            // scan_alpha_sphere raises CorrectnessError on any contradiction
            const FailureStats stats = scan_alpha_sphere(engine, n, opts);
            if (stats.correctness_checked != stats.evaluated - stats.failures) {
                c.fail("n=" + std::to_string(n) + ": not every decision was cross-checked");
            }
        }
    } catch (const std::exception& e) {
        c.fail(e.what());
    }
    c.finish();
}

void criterion_3_bijection() {
    Criterion c{3, "bijection: alpha(phi(x)) = x and phi(alpha(z)) = z"};
    try {
        const IsoEngine engine2 = parity_engine(2);
        uint64_t bad = 0;
        for_each_in_ball(2, 10, kDefaultEnumBudget, [&](const SymString& x) {
            if (engine2.alpha(engine2.phi(x)) != x) ++bad;
            if (engine2.phi(engine2.alpha(x)) != x) ++bad;
        });

        const IsoEngine engine3 = parity_engine(3);
        for_each_in_ball(3, 6, kDefaultEnumBudget, [&](const SymString& x) {
            if (engine3.alpha(engine3.phi(x)) != x) ++bad;
            if (engine3.phi(engine3.alpha(x)) != x) ++bad;
        });

        Rng rng(kDefaultSeed);
        for (int i = 0; i < 60000; ++i) {
            const SymString x = rng.uniform_string(2, 11 + rng.below(30));
            if (engine2.alpha(engine2.phi(x)) != x) ++bad;
            if (engine2.phi(engine2.alpha(x)) != x) ++bad;
        }
        for (int i = 0; i < 40000; ++i) {
            const SymString x = rng.uniform_string(3, 7 + rng.below(18));
            if (engine3.alpha(engine3.phi(x)) != x) ++bad;
            if (engine3.phi(engine3.alpha(x)) != x) ++bad;
        }
        if (bad) c.fail(std::to_string(bad) + " round trips broke");
    } catch (const std::exception& e) {
        c.fail(e.what());
    }
    c.finish();
}

void criterion_4_paddability() {
    Criterion c{4, "paddability contract of all built-ins, exhaustive |x|,|y| <= 5"};
    try {
        Registry registry;
        ValidateOptions opts;
        opts.exhaustive_len = 5;
        opts.samples = 200;
        for (const auto& name : registry.available()) {
            const ValidationReport report = validate_language(registry.lookup(name), opts);
            for (const auto& inv : report.invariants) {
                if (!inv.pass) {
                    c.fail(name + ": " + inv.name +
                           (inv.counterexample ? " (" + *inv.counterexample + ")" : ""));
                }
            }
        }
    } catch (const std::exception& e) {
        c.fail(e.what());
    }
    c.finish();
}

void criterion_5_certified_signs() {
    Criterion c{5, "certified signs: 1000 pos + 1000 neg per n in 1..8 per language"};
    try {
        Registry registry;
        for (const auto& name : registry.available()) {
            const PaddableLanguage& lang = registry.lookup(name);
            const IsoEngine engine(lang);
            for (unsigned n = 1; n <= 8; ++n) {
                for (Sign sign : {Sign::Pos, Sign::Neg}) {
                    GenRequest req{n, sign, 1000, kDefaultSeed + n};
                    const auto outputs = generate(engine, req);
                    const auto outcome = verify_outputs(lang, outputs, sign);
                    if (!outcome.all_match()) {
                        c.fail(name + " n=" + std::to_string(n) + " sign=" + to_string(sign) +
                               ": " + std::to_string(outcome.mismatches.size()) +
                               " mismatches (first index " +
                               std::to_string(outcome.mismatches.front()) + ", seed " +
                               std::to_string(req.seed) + ")");
                    }
                    if (outcome.verified != req.count) {
                        c.fail(name + " n=" + std::to_string(n) + ": only " +
                               std::to_string(outcome.verified) + " of " +
                               std::to_string(req.count) + " within decide budget");
                    }
                }
            }
        }
    } catch (const std::exception& e) {
        c.fail(e.what());
    }
    c.finish();
}

void criterion_6_support_and_uniformity() {
    Criterion c{6, "support sizes, chi-square uniformity, exact flip oracle"};
    try {
        const IsoEngine engine = parity_engine();
        const uint64_t expected_support[] = {4, 64};
        for (unsigned n = 1; n <= 2; ++n) {
            const auto support = support_size(2, n, Sign::Pos).to_u64();
            if (!support || *support != expected_support[n - 1]) {
                c.fail("support at n=" + std::to_string(n) + " is not " +
                       std::to_string(expected_support[n - 1]));
                continue;
            }
            if (BigUint(*support) < BigUint::pow(2, 2 * n)) {
                c.fail("support at n=" + std::to_string(n) + " below k^(2n)");
            }
            for (Sign sign : {Sign::Pos, Sign::Neg}) {
                // uniformity_test raises if any output leaves the support
                const UniformityReport report =
                    uniformity_test(engine, n, sign, 50 * *support, kDefaultSeed);
                if (!report.pass) {
                    c.fail("chi-square p=" + std::to_string(report.p_value) + " at n=" +
                           std::to_string(n) + " sign=" + to_string(sign) + " (M=" +
                           std::to_string(report.support) + ")");
                }
            }
        }

        const FlipDistribution flip = exact_flip_distribution(3, 2, 0);
        if (flip.mass.size() != 4 || !flip.uniform()) {
            c.fail("ternary m=2 flip distribution is not the uniform 1/4");
        }
        for (const char* text : {"01", "10", "12", "21"}) {
            if (!flip.mass.count(SymString::parse(3, text))) {
                c.fail(std::string("flip support misses ") + text);
            }
        }
    } catch (const std::exception& e) {
        c.fail(e.what());
    }
    c.finish();
}

void criterion_7_length_bounds() {
    Criterion c{7, "length bounds: undersized fraction within k^-n plus 3 sigma"};
    try {
        const IsoEngine engine = parity_engine();
        std::map<unsigned, std::vector<std::size_t>> lengths;
        for (unsigned n = 4; n <= 10; ++n) {
            GenRequest req{n, Sign::Pos, 10000, kDefaultSeed + 100 + n};
            for (const auto& x : generate(engine, req)) lengths[n].push_back(x.size());
        }
        const LengthBoundsReport report = length_bounds_check(lengths, 2);
        for (const auto& row : report.rows) {
            if (!row.pass) {
                c.fail("n=" + std::to_string(row.n) + ": undersized fraction " +
                       std::to_string(row.observed_frac) + " above " +
                       std::to_string(row.bound + row.allowance));
            }
        }
        if (report.fit_exponent) {
            char buf[96];
            std::snprintf(buf, sizeof(buf),
                          "empirical max-length exponent %.3f (reported, not asserted)",
                          *report.fit_exponent);
            c.note(buf);
        } else {
            c.fail("no polynomial fit produced");
        }
    } catch (const std::exception& e) {
        c.fail(e.what());
    }
    c.finish();
}

void criterion_8_purity() {
    Criterion c{8, "purity: phi/alpha/classify run under an aborting decider"};
    try {
        PaddableLanguage lang = wrap_core(parity_odd_predicate());
        lang.decide = [](const SymString&) -> bool {
            // Reaching this is a structural breach; kill the run outright.
            std::fprintf(stderr, "purity audit: decide was invoked\n");
            std::abort();
        };
        const IsoEngine engine(lang);
        for_each_in_ball(2, 8, kDefaultEnumBudget, [&](const SymString& x) {
            (void)engine.phi(x);
            (void)engine.alpha(x);
            (void)classify(engine, x);
        });
        ScanOptions opts;  // no correctness checking: the scan must not decide
        (void)scan_alpha_sphere(engine, 10, opts);
        GenRequest req{3, Sign::Pos, 100, kDefaultSeed};
        (void)generate(engine, req);
    } catch (const std::exception& e) {
        c.fail(e.what());
    }
    c.finish();
}

}  // namespace

int main() {
    std::printf("RoughP acceptance suite\n");
    criterion_1_exact_failure_law();
    criterion_2_errorlessness();
    criterion_3_bijection();
    criterion_4_paddability();
    criterion_5_certified_signs();
    criterion_6_support_and_uniformity();
    criterion_7_length_bounds();
    criterion_8_purity();
    if (failures_total == 0) {
        std::printf("all 8 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", failures_total);
    return 1;
}
