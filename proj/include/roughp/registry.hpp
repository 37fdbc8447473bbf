#pragma once

#include <string>
#include <vector>

#include "roughp/language.hpp"

namespace roughp {

// Named languages: the five built-in wrapped predicates plus anything added
// from a JSON config file.
class Registry {
public:
    Registry();  // built-ins only

    const PaddableLanguage& lookup(const std::string& name) const;
    std::vector<std::string> available() const;
    void add(PaddableLanguage lang);

    // Config schema:
    //   { "languages": [ { "name": "...", "predicate": "parity-odd",
    //                      "k": 3, "budgets": { "subset_sum_max_subsets": 1048576,
    //                                           "cnf_max_vars": 20 } } ] }
    // predicate is one of the built-in predicate kinds; name defaults to it.
    void load_config_file(const std::string& path);
    void load_config_text(const std::string& json_text);

private:
    std::vector<PaddableLanguage> languages_;
};

}  // namespace roughp
