// roughp: construct the heuristic and the instance generator for a named
// paddable language, and verify their guarantees.
//
// Subcommands:
//   validate   check the paddability contract of a language
//   decide     run the errorless heuristic on one input
//   iso        apply phi or alpha to one input
//   scan       measure the failure rate over alpha-spheres (CSV)
//   generate   emit certified positive/negative instances
//
// Exit codes: 0 pass, 1 property or verification failure, 2 usage/config
// error (including unknown languages, malformed inputs and budget refusals).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "roughp/generator.hpp"
#include "roughp/heuristic.hpp"
#include "roughp/io.hpp"
#include "roughp/iso.hpp"
#include "roughp/predicates.hpp"
#include "roughp/registry.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
    std::string config;
    uint64_t enum_budget = roughp::kDefaultEnumBudget;
    std::size_t decide_budget = 256;
    uint64_t max_chain = roughp::kDefaultMaxChain;
};

uint64_t env_u64(const char* name, uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::strtoull(v, nullptr, 10);
}

std::ostream& open_or_stdout(const std::string& path, std::optional<std::ofstream>& file) {
    if (path.empty() || path == "-") return std::cout;
    file.emplace(path);
    if (!*file) throw std::runtime_error("cannot open output file: " + path);
    return *file;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << j.dump(2) << '\n';
}

roughp::Registry load_registry(const GlobalOpts& opts) {
    roughp::Registry registry;
    if (!opts.config.empty()) registry.load_config_file(opts.config);
    return registry;
}

int cmd_validate(const GlobalOpts& global, const std::string& lang_name, unsigned exhaustive_len,
                 uint64_t samples, uint64_t seed, const std::string& json_path) {
    const roughp::Registry registry = load_registry(global);
    const auto& lang = registry.lookup(lang_name);

    roughp::ValidateOptions opts;
    opts.exhaustive_len = exhaustive_len;
    opts.samples = samples;
    opts.seed = seed;
    opts.enum_budget = global.enum_budget;
    opts.decide_len_budget = global.decide_budget;
    const auto report = roughp::validate_language(lang, opts);

    for (const auto& inv : report.invariants) {
        std::cout << (inv.pass ? "pass" : "FAIL") << "  " << inv.name << "  (checked "
                  << inv.checked << ")";
        if (inv.counterexample) std::cout << "  counterexample: " << *inv.counterexample;
        std::cout << '\n';
    }
    write_json_file(json_path, roughp::to_json(report));
    return report.all_pass() ? kExitPass : kExitFailure;
}

int cmd_decide(const GlobalOpts& global, const std::string& lang_name, const std::string& input,
               bool trace) {
    const roughp::Registry registry = load_registry(global);
    const auto& lang = registry.lookup(lang_name);
    const roughp::IsoEngine engine(lang, global.max_chain);
    const auto x = roughp::SymString::parse(lang.k, input);
    if (trace) std::cout << roughp::format_trace(engine.phi_trace(x));
    std::cout << roughp::to_string(roughp::classify(engine, x)) << '\n';
    return kExitPass;
}

int cmd_iso(const GlobalOpts& global, const std::string& lang_name, const std::string& apply,
            const std::string& input, bool trace, bool trace_json) {
    const roughp::Registry registry = load_registry(global);
    const auto& lang = registry.lookup(lang_name);
    const roughp::IsoEngine engine(lang, global.max_chain);
    const auto x = roughp::SymString::parse(lang.k, input);
    if (apply != "phi" && apply != "alpha") {
        throw CLI::ValidationError("--apply must be phi or alpha");
    }
    const roughp::ChainTrace t =
        apply == "phi" ? engine.phi_trace(x) : engine.alpha_trace(x);
    if (trace_json) {
        std::cout << roughp::to_json(t).dump(2) << '\n';
    } else if (trace) {
        std::cout << roughp::format_trace(t);
    }
    std::cout << t.result.text() << '\n';
    return kExitPass;
}

int cmd_scan(const GlobalOpts& global, const std::string& lang_name, unsigned min_n, unsigned max_n,
             const std::string& mode, uint64_t samples, bool check_correctness, uint64_t seed,
             unsigned threads, const std::string& out_path, const std::string& json_path) {
    if (min_n > max_n) {
        std::cerr << "scan: empty radius range [" << min_n << ", " << max_n << "]\n";
        return kExitUsage;
    }
    const roughp::Registry registry = load_registry(global);
    const auto& lang = registry.lookup(lang_name);
    const roughp::IsoEngine engine(lang, global.max_chain);

    roughp::ScanOptions opts;
    opts.mode = mode == "sample" ? roughp::ScanMode::Sample : roughp::ScanMode::Exhaustive;
    if (mode != "sample" && mode != "exhaustive") {
        throw CLI::ValidationError("--mode must be exhaustive or sample");
    }
    opts.samples = samples;
    opts.seed = seed;
    opts.check_correctness = check_correctness;
    if (check_correctness) opts.decide = lang.decide;
    opts.decide_len_budget = global.decide_budget;
    opts.enum_budget = global.enum_budget;
    opts.threads = threads;

    std::optional<std::ofstream> file;
    std::ostream& out = open_or_stdout(out_path, file);
    out << roughp::failure_stats_csv_header() << '\n';
    nlohmann::json rows = nlohmann::json::array();
    for (unsigned n = min_n; n <= max_n; ++n) {
        const auto stats = roughp::scan_alpha_sphere(engine, n, opts);
        out << roughp::failure_stats_csv_row(stats) << '\n';
        rows.push_back(roughp::to_json(stats));
    }
    write_json_file(json_path, rows);
    return kExitPass;
}

int cmd_generate(const GlobalOpts& global, const std::string& lang_name, unsigned n,
                 const std::string& sign_text, uint64_t count, uint64_t seed, bool verify,
                 const std::string& out_path, const std::string& report_path) {
    const roughp::Registry registry = load_registry(global);
    const auto& lang = registry.lookup(lang_name);
    const roughp::IsoEngine engine(lang, global.max_chain);

    roughp::GenRequest req;
    req.n = n;
    req.sign = roughp::sign_from_string(sign_text);
    req.count = count;
    req.seed = seed;

    const auto report =
        roughp::run_generation(engine, &lang, req, verify, global.decide_budget);

    std::optional<std::ofstream> file;
    std::ostream& out = open_or_stdout(out_path, file);
    std::vector<roughp::SymString> instances;
    instances.reserve(report.instances.size());
    for (const auto& rec : report.instances) instances.push_back(rec.value);
    roughp::write_instance_file(out, lang.k, instances);

    write_json_file(report_path, roughp::to_json(report));

    if (report.mismatched > 0) {
        for (std::size_t i = 0; i < report.instances.size(); ++i) {
            const auto& rec = report.instances[i];
            if (rec.verified && !*rec.verified) {
                std::cerr << "generate: instance " << i << " (\"" << rec.value.text()
                          << "\") fails " << sign_text << " verification (seed " << seed << ")\n";
            }
        }
        return kExitFailure;
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RoughP heuristic and test-instance generator toolkit"};
    app.require_subcommand(1);

    GlobalOpts global;
    global.enum_budget = env_u64("ROUGHP_ENUM_BUDGET", global.enum_budget);
    global.decide_budget = env_u64("ROUGHP_DECIDE_BUDGET", global.decide_budget);
    if (const char* cfg = std::getenv("ROUGHP_CONFIG")) global.config = cfg;

    app.add_option("--config", global.config, "registry config file (JSON)");
    app.add_option("--enum-budget", global.enum_budget, "max strings per exhaustive scan");
    app.add_option("--decide-budget", global.decide_budget, "max |x| passed to decide");
    app.add_option("--max-chain", global.max_chain, "ancestor chain guard");

    std::string lang_name, input, apply = "phi", mode = "exhaustive", sign_text = "pos";
    std::string out_path, json_path, report_path;
    unsigned exhaustive_len = 5, n = 1, min_n = 0, max_n = 8, threads = 1;
    uint64_t samples = 200, seed = roughp::kDefaultSeed, count = 1, scan_samples = 10000;
    bool trace = false, trace_json = false, check_correctness = false, verify = false;

    auto* validate = app.add_subcommand("validate", "check the paddability contract");
    validate->add_option("--lang", lang_name)->required();
    validate->add_option("--exhaustive-len", exhaustive_len);
    validate->add_option("--samples", samples);
    validate->add_option("--seed", seed);
    validate->add_option("--json", json_path, "write the report as JSON");

    auto* decide = app.add_subcommand("decide", "run the errorless heuristic");
    decide->add_option("--lang", lang_name)->required();
    decide->add_option("--input", input)->required();
    decide->add_flag("--trace", trace, "print the phi chain");

    auto* iso = app.add_subcommand("iso", "apply the isomorphism");
    iso->add_option("--lang", lang_name)->required();
    iso->add_option("--apply", apply, "phi or alpha")->required();
    iso->add_option("--input", input)->required();
    iso->add_flag("--trace", trace, "print the ancestor chain as indented text");
    iso->add_flag("--trace-json", trace_json, "print the ancestor chain as JSON");

    auto* scan = app.add_subcommand("scan", "failure rates over alpha-spheres");
    scan->add_option("--lang", lang_name)->required();
    scan->add_option("--min-n", min_n)->required();
    scan->add_option("--max-n", max_n)->required();
    scan->add_option("--mode", mode, "exhaustive or sample");
    scan->add_option("--samples", scan_samples, "samples per sphere in sample mode");
    scan->add_flag("--check-correctness", check_correctness,
                   "cross-check accept/reject against decide");
    scan->add_option("--seed", seed);
    scan->add_option("--threads", threads);
    scan->add_option("--out", out_path, "CSV path (default stdout)");
    scan->add_option("--json", json_path);

    auto* generate = app.add_subcommand("generate", "emit certified instances");
    generate->add_option("--lang", lang_name)->required();
    generate->add_option("-n,--n", n)->required();
    generate->add_option("--sign", sign_text, "pos or neg")->required();
    generate->add_option("--count", count);
    generate->add_option("--seed", seed);
    generate->add_flag("--verify", verify, "run decide on every instance");
    generate->add_option("--out", out_path, "instance file path (default stdout)");
    generate->add_option("--report", report_path, "write the generation report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (validate->parsed()) {
            return cmd_validate(global, lang_name, exhaustive_len, samples, seed, json_path);
        }
        if (decide->parsed()) {
            return cmd_decide(global, lang_name, input, trace);
        }
        if (iso->parsed()) {
            return cmd_iso(global, lang_name, apply, input, trace, trace_json);
        }
        if (scan->parsed()) {
            return cmd_scan(global, lang_name, min_n, max_n, mode, scan_samples,
                            check_correctness, seed, threads, out_path, json_path);
        }
        if (generate->parsed()) {
            return cmd_generate(global, lang_name, n, sign_text, count, seed, verify, out_path,
                                report_path);
        }
    } catch (const roughp::CorrectnessError& e) {
        std::cerr << "property failure: " << e.what() << '\n';
        return kExitFailure;
    } catch (const roughp::UnknownLanguageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const roughp::BudgetError& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
