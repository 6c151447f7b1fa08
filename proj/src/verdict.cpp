#include "extricat/verdict.hpp"

namespace extricat {

std::string to_string(Status s) {
    switch (s) {
        case Status::HOLDS: return "HOLDS";
        case Status::FAILS: return "FAILS";
        case Status::UNKNOWN: return "UNKNOWN";
        case Status::SKIPPED: return "SKIPPED";
        case Status::INCONSISTENT: return "INCONSISTENT";
    }
    return "?";
}

Verdict Verdict::holds(Json detail) { return Verdict{Status::HOLDS, std::move(detail)}; }

Verdict Verdict::fails(Json witness) {
    Json d = Json::object();
    d["witness"] = std::move(witness);
    return Verdict{Status::FAILS, std::move(d)};
}

Verdict Verdict::unknown(const std::string& cap, Json detail) {
    detail["cap_hit"] = cap;
    return Verdict{Status::UNKNOWN, std::move(detail)};
}

Verdict Verdict::skipped(const std::string& hypothesis, Json witness) {
    Json d = Json::object();
    d["hypothesis"] = hypothesis;
    if (!witness.empty()) d["witness"] = std::move(witness);
    return Verdict{Status::SKIPPED, std::move(d)};
}

Verdict Verdict::inconsistent(Json detail) { return Verdict{Status::INCONSISTENT, std::move(detail)}; }

Json Verdict::to_json() const {
    Json j = Json::object();
    j["status"] = to_string(status);
    if (!detail.empty()) j["detail"] = detail;
    return j;
}

Status combine(Status a, Status b) {
    auto sev = [](Status s) {
        switch (s) {
            case Status::INCONSISTENT: return 4;
            case Status::FAILS: return 3;
            case Status::UNKNOWN: return 2;
            case Status::SKIPPED: return 1;
            case Status::HOLDS: return 0;
        }
        return 0;
    };
    return sev(a) >= sev(b) ? a : b;
}

int exit_code_for(Status s) {
    switch (s) {
        case Status::HOLDS:
        case Status::SKIPPED: return 0;
        case Status::FAILS: return 1;
        case Status::UNKNOWN: return 2;
        case Status::INCONSISTENT: return 4;
    }
    return 4;
}

Json Caps::to_json() const {
    Json j = Json::object();
    j["dim_bound"] = dim_bound;
    j["default_dim_bound"] = default_dim_bound;
    j["mult_bound"] = mult_bound;
    j["idempotent_cap"] = idempotent_cap;
    j["iso_cap"] = iso_cap;
    j["hom_enum_cap"] = hom_enum_cap;
    j["sweep_budget"] = sweep_budget;
    j["subset_limit"] = subset_limit;
    j["approx_mult_bound"] = approx_mult_bound;
    j["approx_dim_slack"] = approx_dim_slack;
    j["sample_cap"] = sample_cap;
    j["seed"] = seed;
    return j;
}

} // namespace extricat
