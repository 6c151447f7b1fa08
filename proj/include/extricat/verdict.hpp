#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace extricat {

// Insertion-ordered JSON keeps report bytes stable across runs.
using Json = nlohmann::ordered_json;

enum class Status { HOLDS, FAILS, UNKNOWN, SKIPPED, INCONSISTENT };

std::string to_string(Status s);

// Three-valued outcome plus structured evidence. FAILS always carries a
// witness, UNKNOWN the cap that was hit, SKIPPED the failed hypothesis.
struct Verdict {
    Status status = Status::HOLDS;
    Json detail = Json::object();

    static Verdict holds(Json detail = Json::object());
    static Verdict fails(Json witness);
    static Verdict unknown(const std::string& cap, Json detail = Json::object());
    static Verdict skipped(const std::string& hypothesis, Json witness = Json::object());
    static Verdict inconsistent(Json detail);

    bool ok() const { return status == Status::HOLDS || status == Status::SKIPPED; }
    Json to_json() const;
};

// Worst-first aggregation used for exit codes: INCONSISTENT > FAILS >
// UNKNOWN > SKIPPED/HOLDS.
Status combine(Status a, Status b);
int exit_code_for(Status s);

struct Caps {
    std::vector<int> dim_bound;        // per-vertex bound for module sweeps
    int default_dim_bound = 2;
    int mult_bound = 2;                // summand multiplicity for morphism-category sweeps
    uint64_t idempotent_cap = 1u << 20;
    uint64_t iso_cap = 1u << 20;
    uint64_t hom_enum_cap = 1u << 20;  // full Hom-space enumerations
    uint64_t sweep_budget = 1u << 16;  // total candidates per catalog sweep
    int subset_limit = 12;             // cotorsion pair enumeration guard
    int approx_mult_bound = 2;
    int approx_dim_slack = 8;
    uint64_t sample_cap = 4096;
    uint64_t seed = 0;

    int bound_for_vertex(size_t v) const {
        return v < dim_bound.size() ? dim_bound[v] : default_dim_bound;
    }
    Json to_json() const;
};

} // namespace extricat
