#include "roughp/registry.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "roughp/predicates.hpp"

namespace roughp {

namespace {

CorePredicate predicate_by_kind(const std::string& kind, unsigned k,
                                const PredicateBudgets& budgets) {
    if (kind == "parity-odd") return parity_odd_predicate(k);
    if (kind == "substring-11") return substring_11_predicate(k);
    if (kind == "triangle") return triangle_predicate(k);
    if (kind == "subset-sum") return subset_sum_predicate(k, budgets);
    if (kind == "cnf-sat") return cnf_sat_predicate(k, budgets);
    throw UnknownLanguageError("unknown predicate kind \"" + kind +
                               "\" (expected parity-odd, substring-11, triangle, "
                               "subset-sum or cnf-sat)");
}

}  // namespace

Registry::Registry() {
    add(wrap_core(parity_odd_predicate()));
    add(wrap_core(substring_11_predicate()));
    add(wrap_core(triangle_predicate()));
    add(wrap_core(subset_sum_predicate()));
    add(wrap_core(cnf_sat_predicate()));
}

void Registry::add(PaddableLanguage lang) {
    for (auto& existing : languages_) {
        if (existing.name == lang.name) {
            existing = std::move(lang);
            return;
        }
    }
    languages_.push_back(std::move(lang));
}

const PaddableLanguage& Registry::lookup(const std::string& name) const {
    for (const auto& lang : languages_) {
        if (lang.name == name) return lang;
    }
    std::ostringstream msg;
    msg << "unknown language \"" << name << "\"; available:";
    for (const auto& avail : available()) msg << " " << avail;
    throw UnknownLanguageError(msg.str());
}

std::vector<std::string> Registry::available() const {
    std::vector<std::string> names;
    names.reserve(languages_.size());
    for (const auto& lang : languages_) names.push_back(lang.name);
    return names;
}

void Registry::load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    load_config_text(buf.str());
}

void Registry::load_config_text(const std::string& json_text) {
    const auto doc = nlohmann::json::parse(json_text);
    if (!doc.contains("languages") || !doc["languages"].is_array()) {
        throw std::runtime_error("config needs a top-level \"languages\" array");
    }
    for (const auto& entry : doc["languages"]) {
        const std::string kind = entry.at("predicate").get<std::string>();
        const unsigned k = entry.value("k", 2u);
        PredicateBudgets budgets;
        if (entry.contains("budgets")) {
            const auto& b = entry["budgets"];
            budgets.subset_sum_max_subsets =
                b.value("subset_sum_max_subsets", budgets.subset_sum_max_subsets);
            budgets.cnf_max_vars = b.value("cnf_max_vars", budgets.cnf_max_vars);
        }
        CorePredicate pred = predicate_by_kind(kind, k, budgets);
        pred.name = entry.value("name", kind);
        add(wrap_core(pred));
    }
}

}  // namespace roughp
