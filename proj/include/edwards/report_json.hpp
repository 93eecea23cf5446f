#pragma once

#include "edwards/group_check.hpp"
#include "edwards/version.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>

namespace edwards {

// Report layout (keys emitted sorted). No wall-clock fields: the same
// config and seed must serialize to byte-identical JSON.
inline nlohmann::json report_to_json(const Report& rep) {
    nlohmann::json j;
    j["schema_version"] = SCHEMA_VERSION;
    j["mode"] = rep.mode;
    j["level"] = rep.level;
    j["p"] = rep.p.str();
    j["c"] = rep.c.str();
    j["d"] = rep.d.str();
    if (rep.t) j["t"] = rep.t->str();
    j["seed"] = rep.seed;
    j["all_pass"] = rep.all_pass();
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : rep.checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["checked"] = c.checked;
        jc["witness"] = c.witness;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    return j;
}

inline void write_report(const Report& rep, const std::filesystem::path& file) {
    std::ofstream os(file);
    if (!os) throw EdwardsError("cannot write " + file.string());
    os << report_to_json(rep).dump(2) << "\n";
}

} // namespace edwards
