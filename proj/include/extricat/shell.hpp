#pragma once

#include "extricat/cotorsion.hpp"

#include <optional>

namespace extricat {

// Parsed scenario file: base algebra, the category under study, optional
// recollement wiring and the caps.
struct ScenarioSpec {
    std::string name;
    FieldSpec field;
    Quiver quiver;
    std::vector<Relation> relations;
    std::string construction = "modules"; // modules | morphism_category | subcategory
    std::string ambient = "modules";      // for subcategory
    std::vector<std::string> objects;     // carrier names for subcategory
    bool has_recollement = false;
    bool rec_a_full = true, rec_b_full = true, rec_c_full = true;
    std::vector<std::string> rec_a, rec_b, rec_c;
    Caps caps;

    std::string content_key() const;
};

ScenarioSpec parse_scenario(const std::string& text);
ScenarioSpec builtin_scenario(const std::string& name);
bool is_builtin_scenario(const std::string& name);

struct ShellOptions {
    bool use_cache = true;
    bool verify_cache = false; // recompute and compare against a cached copy
    std::string cache_dir;     // empty: EXTRICAT_CACHE_DIR or .extricat-cache
    uint64_t seed = 0;
};

struct LoadedScenario {
    ScenarioSpec spec;
    std::shared_ptr<const Algebra> base;
    RecContext ctx; // tri is null unless the scenario needs it
    std::shared_ptr<const Catalog> cat_base;
    std::shared_ptr<const Catalog> cat_tri;
    ExCat main;
    std::optional<RecollementScenario> recollement;
    std::string hash;
    Json cache_notes = Json::array();

    Subcat parse_object_list(const std::string& list, bool middle) const;
    const Catalog& main_catalog() const { return *main.carrier.catalog; }
};

LoadedScenario load_scenario(const ScenarioSpec& spec, const ShellOptions& opts);

// catalog cache, plain text, write-temp-then-rename
std::string catalog_cache_key(const Algebra& alg, const std::string& strategy, const std::vector<int>& bounds,
                              const Caps& caps);
std::string serialize_catalog(const Catalog& cat, const std::string& key);
Catalog deserialize_catalog(const std::string& text, std::shared_ptr<const Algebra> alg,
                            const std::string& expected_key);
bool catalogs_equal(const Catalog& a, const Catalog& b);

struct Report {
    std::string tool_version;
    std::string scenario_hash;
    std::string command;
    Json caps;
    Json results;
    Status status = Status::HOLDS;

    Json to_json() const;
    std::string human() const;
};

std::string emit_report(const Report& r, const std::string& format); // human | json
Report parse_report(const std::string& json_text);

// whole CLI as a library call so tests drive the exact production path
struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};
CliResult run_cli(const std::vector<std::string>& args);

extern const char* kToolVersion;

} // namespace extricat
