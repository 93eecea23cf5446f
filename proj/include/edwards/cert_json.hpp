#pragma once

#include "edwards/certificates.hpp"
#include "edwards/version.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace edwards {

// Serialized certificate layout (keys emitted sorted, all coefficients
// integer after make_integral):
// {"schema_version", "name", "variables", "order",
//  "target", "basis", "cofactors", "invertibles"}
inline nlohmann::json certificate_to_json(const Certificate& cert) {
    nlohmann::json j;
    j["schema_version"] = SCHEMA_VERSION;
    j["name"] = cert.name;
    j["variables"] = cert.ctx->names();
    j["order"] = order_name(cert.order.kind);
    j["target"] = cert.target.format(cert.order);
    auto polys = [&](const std::vector<MPoly>& v) {
        std::vector<std::string> out;
        out.reserve(v.size());
        for (const MPoly& p : v) out.push_back(p.format(cert.order));
        return out;
    };
    j["basis"] = polys(cert.basis);
    j["cofactors"] = polys(cert.cofactors);
    j["invertibles"] = polys(cert.invertibles);
    return j;
}

inline Certificate certificate_from_json(const nlohmann::json& j) {
    if (j.at("schema_version").get<int>() != SCHEMA_VERSION)
        throw EdwardsError("certificate schema version mismatch");
    Ctx ctx = VarContext::make(j.at("variables").get<std::vector<std::string>>());
    MonomialOrder ord{order_from_name(j.at("order").get<std::string>())};
    auto polys = [&](const nlohmann::json& arr) {
        std::vector<MPoly> out;
        out.reserve(arr.size());
        for (const auto& s : arr) out.push_back(MPoly::parse(ctx, s.get<std::string>()));
        return out;
    };
    return Certificate{j.at("name").get<std::string>(),
                       ctx,
                       ord,
                       MPoly::parse(ctx, j.at("target").get<std::string>()),
                       polys(j.at("basis")),
                       polys(j.at("cofactors")),
                       polys(j.at("invertibles"))};
}

inline void write_certificate(const Certificate& cert, const std::filesystem::path& file) {
    std::ofstream os(file);
    if (!os) throw EdwardsError("cannot write " + file.string());
    os << certificate_to_json(cert).dump(2) << "\n";
}

inline Certificate read_certificate(const std::filesystem::path& file) {
    std::ifstream is(file);
    if (!is) throw EdwardsError("cannot read " + file.string());
    nlohmann::json j;
    is >> j;
    return certificate_from_json(j);
}

// Build once, then reuse: certificates are cached keyed by name and engine
// version, so a stale cache from an older engine is never picked up.
inline Certificate certify_cached(const std::string& name,
                                  const std::filesystem::path& cache_dir) {
    std::filesystem::path file =
        cache_dir / (name + "-v" + std::to_string(ENGINE_VERSION) + ".json");
    if (std::filesystem::exists(file)) {
        Certificate cert = read_certificate(file);
        if (cert.name == name) return cert;
        throw EdwardsError("cache file " + file.string() + " holds certificate '" +
                           cert.name + "'");
    }
    Certificate cert = certify(name);
    std::filesystem::create_directories(cache_dir);
    write_certificate(cert, file);
    return cert;
}

} // namespace edwards
