#include "edwards/cert_json.hpp"
#include "edwards/certificates.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace edwards;

namespace {

MPoly perturb_first_coeff(const MPoly& p) {
    REQUIRE(!p.is_zero());
    auto& [e, c] = *p.terms().begin();
    MPoly q = p;
    q.add_term(e, Rat(1));
    if (q.term_count() != p.term_count()) q.add_term(e, Rat(1)); // c was -1
    return q;
}

} // namespace

TEST_CASE("every registered certificate builds and verifies") {
    auto names = certificate_names();
    REQUIRE(names.size() == 77);
    for (const std::string& n : names) {
        INFO(n);
        Certificate cert = certify(n);
        std::string diag;
        REQUIRE(verify_certificate(cert, 0, &diag));
        // integral form: no rational coefficient survives construction
        for (auto& [e, c] : cert.target.terms()) CHECK(rat_den(c) == 1);
        for (const MPoly& b : cert.basis)
            for (auto& [e, c] : b.terms()) CHECK(rat_den(c) == 1);
        for (const MPoly& f : cert.cofactors)
            for (auto& [e, c] : f.terms()) CHECK(rat_den(c) == 1);
    }
}

TEST_CASE("affine closure has the expected cofactors") {
    Certificate cert = certify("affine_closure");
    SymbolicCurve s = SymbolicCurve::general(2);
    REQUIRE(cert.basis.size() == 3);
    CHECK(cert.basis[0] == s.curve(1));
    CHECK(cert.basis[1] == s.build_deltas().delta);
    CHECK(cert.basis[2] == s.curve(2));
    CHECK(cert.cofactors[0] == s.poly("d^2*y1^2*y2^2*x2^2"));
    CHECK(cert.cofactors[1] == s.poly("1 - d*y1^2"));
    CHECK(cert.cofactors[2] == s.poly("-(d*y1^2)"));
    CHECK(cert.target == s.poly("(1 - c*d*y1^2*y2^2)*(1 - d*y1^2*x2^2)"));
}

TEST_CASE("verification rejects a perturbed cofactor") {
    Certificate cert = certify("closure");
    REQUIRE(verify_certificate(cert));
    bool touched = false;
    for (MPoly& f : cert.cofactors) {
        if (f.is_zero()) continue;
        f = perturb_first_coeff(f);
        touched = true;
        break;
    }
    REQUIRE(touched);
    std::string diag;
    CHECK_FALSE(verify_certificate(cert, 0, &diag));
    CHECK(diag.find("replay") != std::string::npos);
}

TEST_CASE("dichotomy minus needs the corrected factor") {
    // the bare difference of squares is NOT in the minus ideal; only the
    // corrected multiple 2*x0*y0*(y0^2 - x1^2) reduces to zero
    auto sys = detail_cert::dichotomy_system();
    MonomialOrder ord{OrderKind::lex};
    std::vector<MPoly> gb =
        groebner({sys.e0, sys.e1, sys.dprime, sys.dminus}, ord);
    MPoly uncorrected = sys.sym.poly("y0^2 - x1^2");
    MPoly corrected = sys.sym.poly("2*x0*y0*(y0^2 - x1^2)");
    CHECK_FALSE(reduce(uncorrected, gb, ord).remainder.is_zero());
    CHECK(reduce(corrected, gb, ord).remainder.is_zero());
    // the registry certificate carries the extra (1 - t^2) factor
    Certificate cert = certify("dichotomy_minus_2");
    CHECK(cert.target == sys.sym.poly("2*x0*y0*(1 - t^2)*(y0^2 - x1^2)"));
}

TEST_CASE("dichotomy plus reduces the uncorrected forms directly") {
    auto sys = detail_cert::dichotomy_system();
    MonomialOrder ord{OrderKind::lex};
    std::vector<MPoly> gb = groebner({sys.e0, sys.e1, sys.dprime, sys.dplus}, ord);
    CHECK(reduce(sys.sym.poly("x0^2 - y1^2"), gb, ord).remainder.is_zero());
    CHECK(reduce(sys.sym.poly("y0^2 - x1^2"), gb, ord).remainder.is_zero());
}

TEST_CASE("inverse uniqueness targets are members of the reduced basis") {
    for (const char* name : {"inverse_unique_0_x", "inverse_unique_0_y",
                             "inverse_unique_1_x", "inverse_unique_1_y"}) {
        INFO(name);
        Certificate cert = certify(name);
        // cofactors pick out the target as a single basis element
        size_t nonzero = 0;
        for (size_t i = 0; i < cert.cofactors.size(); ++i) {
            if (cert.cofactors[i].is_zero()) continue;
            ++nonzero;
            CHECK(cert.cofactors[i].is_constant());
            CHECK(cert.cofactors[i] * cert.basis[i] == cert.target);
        }
        CHECK(nonzero == 1);
    }
}

TEST_CASE("certificate json round trip") {
    Certificate cert = certify("coherence_closure");
    nlohmann::json j = certificate_to_json(cert);
    CHECK(j.at("schema_version") == SCHEMA_VERSION);
    CHECK(j.at("name") == "coherence_closure");
    Certificate back = certificate_from_json(j);
    CHECK(back.ctx->names() == cert.ctx->names());
    CHECK(back.target == cert.target);
    CHECK(back.basis == cert.basis);
    CHECK(back.cofactors == cert.cofactors);
    CHECK(back.invertibles == cert.invertibles);
    CHECK(verify_certificate(back));
    CHECK(certificate_to_json(back).dump() == j.dump());
}

TEST_CASE("certificate cache writes once and reloads") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "edwards-cert-cache-test";
    fs::remove_all(dir);
    Certificate first = certify_cached("inverse_x", dir);
    fs::path file = dir / ("inverse_x-v" + std::to_string(ENGINE_VERSION) + ".json");
    REQUIRE(fs::exists(file));
    auto stamp = fs::last_write_time(file);
    Certificate again = certify_cached("inverse_x", dir);
    CHECK(fs::last_write_time(file) == stamp);
    CHECK(again.target == first.target);
    CHECK(verify_certificate(again));
    // a cache file whose content names a different certificate is rejected
    write_certificate(certify("inverse_y"),
                      dir / ("closure-v" + std::to_string(ENGINE_VERSION) + ".json"));
    CHECK_THROWS_AS(certify_cached("closure", dir), EdwardsError);
    fs::remove_all(dir);
}

TEST_CASE("unknown certificate name is rejected") {
    CHECK_THROWS_AS(certify("no_such_identity"), EdwardsError);
}
