#include "roughp/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace roughp {

namespace {

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

std::string failure_stats_csv_header() {
    return "n,sphere_size,failures,rate,bound,mode,samples,ci_lo,ci_hi,checked";
}

std::string failure_stats_csv_row(const FailureStats& stats) {
    std::ostringstream row;
    row << stats.n << ',' << stats.sphere_size.to_string() << ',' << stats.failures << ','
        << fmt_double(stats.rate) << ',' << fmt_double(stats.bound) << ','
        << (stats.mode == ScanMode::Exhaustive ? "exhaustive" : "sample") << ','
        << stats.evaluated << ',';
    if (stats.ci) {
        row << fmt_double(stats.ci->lo) << ',' << fmt_double(stats.ci->hi);
    } else {
        row << ',';
    }
    row << ',' << stats.correctness_checked;
    return row.str();
}

nlohmann::json to_json(const FailureStats& stats) {
    nlohmann::json j{
        {"n", stats.n},
        {"sphere_size", stats.sphere_size.to_string()},
        {"failures", stats.failures},
        {"rate", stats.rate},
        {"bound", stats.bound},
        {"mode", stats.mode == ScanMode::Exhaustive ? "exhaustive" : "sample"},
        {"samples", stats.evaluated},
        {"checked", stats.correctness_checked},
    };
    if (stats.ci) {
        j["ci_lo"] = stats.ci->lo;
        j["ci_hi"] = stats.ci->hi;
    }
    return j;
}

nlohmann::json to_json(const ValidationReport& report) {
    nlohmann::json invariants = nlohmann::json::array();
    for (const auto& inv : report.invariants) {
        nlohmann::json j{{"name", inv.name}, {"pass", inv.pass}, {"checked", inv.checked}};
        if (inv.counterexample) j["counterexample"] = *inv.counterexample;
        invariants.push_back(std::move(j));
    }
    return nlohmann::json{
        {"language", report.language},   {"k", report.k},
        {"exhaustive_len", report.exhaustive_len}, {"samples", report.samples},
        {"seed", report.seed},           {"pass", report.all_pass()},
        {"invariants", std::move(invariants)},
    };
}

nlohmann::json to_json(const UniformityReport& report) {
    return nlohmann::json{
        {"n", report.n},
        {"m", report.m},
        {"support", report.support},
        {"samples", report.samples},
        {"chi_square", report.chi_square},
        {"p_value", report.p_value},
        {"min_cell", report.min_cell},
        {"max_cell", report.max_cell},
        {"pass", report.pass},
    };
}

nlohmann::json to_json(const LengthBoundsReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        rows.push_back(nlohmann::json{
            {"n", row.n},
            {"samples", row.samples},
            {"undersized", row.undersized},
            {"observed_frac", row.observed_frac},
            {"bound", row.bound},
            {"allowance", row.allowance},
            {"max_len", row.max_len},
            {"mean_len", row.mean_len},
            {"pass", row.pass},
        });
    }
    nlohmann::json j{{"rows", std::move(rows)}, {"pass", report.pass}};
    if (report.fit_exponent) j["fit_exponent"] = *report.fit_exponent;
    return j;
}

nlohmann::json to_json(const GenReport& report, bool include_instances) {
    nlohmann::json j{
        {"language", report.language},
        {"k", report.k},
        {"n", report.n},
        {"sign", to_string(report.sign)},
        {"seed", report.seed},
        {"count", report.instances.size()},
        {"min_len", report.min_len},
        {"max_len", report.max_len},
        {"mean_len", report.mean_len},
        {"undersized", report.undersized},
        {"support_lower_bound", report.support_lower_bound.to_string()},
        {"verified", report.verified},
        {"unverified", report.unverified},
        {"mismatched", report.mismatched},
    };
    if (include_instances) {
        nlohmann::json instances = nlohmann::json::array();
        for (const auto& rec : report.instances) {
            nlohmann::json r{{"x", rec.value.text()}, {"len", rec.value.size()}};
            if (rec.verified) r["verified"] = *rec.verified;
            instances.push_back(std::move(r));
        }
        j["instances"] = std::move(instances);
    }
    return j;
}

nlohmann::json to_json(const ChainTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& [kind, value] : trace.steps) {
        steps.push_back(nlohmann::json{{"step", to_string(kind)}, {"value", value.text()}});
    }
    return nlohmann::json{
        {"start", trace.start.text()},
        {"steps", std::move(steps)},
        {"terminal_rule", to_string(trace.rule)},
        {"result", trace.result.text()},
    };
}

std::string format_trace(const ChainTrace& trace) {
    std::ostringstream out;
    out << "start \"" << trace.start.text() << "\"\n";
    std::string indent = "  ";
    for (const auto& [kind, value] : trace.steps) {
        out << indent << to_string(kind) << " -> \"" << value.text() << "\"\n";
        indent += "  ";
    }
    out << indent << to_string(trace.rule) << " -> \"" << trace.result.text() << "\"\n";
    return out.str();
}

void write_instance_file(std::ostream& out, unsigned k, std::span<const SymString> instances) {
    out << "k=" << k << '\n';
    for (const auto& x : instances) out << x.text() << '\n';
}

std::pair<unsigned, std::vector<SymString>> read_instance_file(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("k=", 0) != 0) {
        throw std::runtime_error("instance file must start with a k=<int> header");
    }
    const unsigned k = static_cast<unsigned>(std::stoul(header.substr(2)));
    std::vector<SymString> instances;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        instances.push_back(SymString::parse(k, line));
    }
    return {k, std::move(instances)};
}

}  // namespace roughp
