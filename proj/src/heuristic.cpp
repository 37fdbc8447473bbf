#include "roughp/heuristic.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

namespace roughp {

const char* to_string(Decision d) {
    switch (d) {
        case Decision::Accept: return "accept";
        case Decision::Reject: return "reject";
        case Decision::Unknown: return "unknown";
    }
    return "?";
}

Decision classify(const IsoEngine& engine, const SymString& x) {
    const SymString image = engine.phi(x);
    if (weight(image) % 2 == 1) return Decision::Accept;
    if (is_symmetric(image)) return Decision::Unknown;
    return Decision::Reject;
}

double failure_bound(unsigned n, unsigned k) {
    return std::pow(static_cast<double>(k), -static_cast<double>(n) / 2.0);
}

namespace {

struct Tally {
    uint64_t evaluated = 0;
    uint64_t failures = 0;
    uint64_t checked = 0;

    void merge(const Tally& other) {
        evaluated += other.evaluated;
        failures += other.failures;
        checked += other.checked;
    }
};

void classify_and_tally(const IsoEngine& engine, const SymString& z, const ScanOptions& opts,
                        Tally& tally) {
    const SymString instance = engine.alpha(z);
    const Decision decision = classify(engine, instance);
    tally.evaluated++;
    if (decision == Decision::Unknown) {
        tally.failures++;
        return;
    }
    if (opts.check_correctness && instance.size() <= opts.decide_len_budget) {
        const bool member = opts.decide(instance);
        tally.checked++;
        if (member != (decision == Decision::Accept)) {
            throw CorrectnessError("heuristic decision \"" + std::string(to_string(decision)) +
                                       "\" contradicts decide on alpha(\"" + z.text() + "\")",
                                   instance.text());
        }
    }
}

}  // namespace

FailureStats scan_alpha_sphere(const IsoEngine& engine, unsigned n, const ScanOptions& opts) {
    if (opts.check_correctness && !opts.decide) {
        throw std::invalid_argument("check_correctness requires a decide function");
    }
    const unsigned k = engine.k();

    FailureStats stats;
    stats.n = n;
    stats.sphere_size = BigUint::pow(k, n);
    stats.mode = opts.mode;
    stats.bound = failure_bound(n, k);

    Tally total;
    if (opts.mode == ScanMode::Exhaustive) {
        const uint64_t sphere = require_enumerable(k, n, opts.enum_budget);
        unsigned threads = std::max(1u, opts.threads);
        if (sphere <= 1024) threads = 1;  // not worth spawning for
        if (threads == 1) {
            for_each_in_sphere(k, n, opts.enum_budget,
                               [&](const SymString& z) { classify_and_tally(engine, z, opts, total); });
        } else {
            std::vector<Tally> parts(threads);
            std::vector<std::exception_ptr> errors(threads);
            std::vector<std::thread> pool;
            pool.reserve(threads);
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back([&, t] {
                    try {
                        for_each_in_sphere_part(k, n, t, threads, opts.enum_budget,
                                                [&](const SymString& z) {
                                                    classify_and_tally(engine, z, opts, parts[t]);
                                                });
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            }
            for (auto& worker : pool) worker.join();
            for (const auto& err : errors) {
                if (err) std::rethrow_exception(err);
            }
            for (const auto& part : parts) total.merge(part);
        }

        // Exact failure law: the unknown set of the alpha-sphere is the
        // image of the symmetric strings of length n.
        const uint64_t expected =
            n % 2 == 0 ? *sphere_size_u64(k, n / 2) : 0;
        if (total.failures != expected) {
            throw CorrectnessError("alpha-sphere n=" + std::to_string(n) + " has " +
                                       std::to_string(total.failures) + " failures, expected " +
                                       std::to_string(expected),
                                   "");
        }
    } else {
        Rng rng(opts.seed);
        for (uint64_t i = 0; i < opts.samples; ++i) {
            classify_and_tally(engine, rng.uniform_string(k, n), opts, total);
        }
        stats.ci = wilson95(total.failures, total.evaluated);
    }

    stats.evaluated = total.evaluated;
    stats.failures = total.failures;
    stats.correctness_checked = total.checked;
    stats.rate = total.evaluated == 0
                     ? 0.0
                     : static_cast<double>(total.failures) / static_cast<double>(total.evaluated);
    return stats;
}

}  // namespace roughp
