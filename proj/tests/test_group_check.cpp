#include "edwards/group_check.hpp"
#include "edwards/report_json.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>

using namespace edwards;

static const CheckResult& find_check(const Report& rep, const std::string& name) {
    for (const CheckResult& c : rep.checks)
        if (c.name == name) return c;
    FAIL("missing check " + name);
    throw std::logic_error("unreachable");
}

TEST_CASE("affine full run") {
    Report rep = group_check(CurveParams::general(13, 1, 2), CheckMode::affine,
                             CheckLevel::full);
    CHECK(rep.all_pass());
    CHECK(rep.mode == "affine");
    CHECK(rep.level == "full");
    CHECK(rep.checks.size() == 6);
    CHECK(find_check(rep, "delta_nonvanishing").checked == 64);
    CHECK(find_check(rep, "closure").checked == 64);
    CHECK(find_check(rep, "commutativity").checked == 64);
    CHECK(find_check(rep, "identity").checked == 8);
    CHECK(find_check(rep, "inverse").checked == 8);
    CHECK(find_check(rep, "associativity").checked == 512);
    for (const CheckResult& c : rep.checks) CHECK(c.witness.empty());
}

TEST_CASE("affine hypothesis gate") {
    // d = 4 = 2^2 violates the nonsquare hypothesis...
    CHECK_THROWS_AS(group_check(CurveParams::general(13, 1, 4), CheckMode::affine,
                                CheckLevel::full),
                    HypothesisViolated);
    // ...and the failure is real: some on-curve pair has vanishing delta
    CurveParams cp = CurveParams::general(13, 1, 4);
    bool found = false;
    for (const AffinePoint& P : enumerate_affine(cp))
        for (const AffinePoint& Q : enumerate_affine(cp))
            if (delta0(P, Q, cp).is_zero()) found = true;
    CHECK(found);

    // c must be a square
    CHECK_THROWS_AS(group_check(CurveParams::general(13, 2, 2), CheckMode::affine,
                                CheckLevel::full),
                    HypothesisViolated);

    // projective mode needs t
    CHECK_THROWS_AS(group_check(CurveParams::general(13, 1, 2), CheckMode::projective,
                                CheckLevel::full),
                    HypothesisViolated);
}

TEST_CASE("projective full run") {
    Report rep = group_check(CurveParams::rescaled(13, 2), CheckMode::projective,
                             CheckLevel::full);
    CHECK(rep.all_pass());
    REQUIRE(rep.t.has_value());
    CHECK(*rep.t == 2);

    std::map<std::string, std::uint64_t> expect = {
        {"closure", 256},       {"commutativity", 256}, {"identity", 16},
        {"inverse", 16},        {"associativity", 4096}, {"equivariance", 256},
        {"fixed_point_freeness", 56}, {"dichotomy_totality", 144},
        {"delta_relation_1", 64}, {"delta_relation_2", 64}, {"delta_relation_3", 96},
        {"delta_relation_4", 96}, {"delta_relation_5", 64}, {"delta_relation_6", 32},
        {"delta_relation_7", 32}, {"delta_relation_8", 64}, {"semi", 144},
    };
    CHECK(rep.checks.size() == expect.size());
    for (const auto& [name, checked] : expect) {
        const CheckResult& c = find_check(rep, name);
        CHECK(c.pass);
        CHECK(c.checked == checked);
    }
}

TEST_CASE("sampled associativity") {
    Report rep = group_check(CurveParams::rescaled(17, 2), CheckMode::projective,
                             CheckLevel::axioms, 7);
    CHECK(rep.all_pass());
    CHECK(find_check(rep, "associativity").checked == 1000);
    CHECK(rep.seed == 7);
}

TEST_CASE("report json is reproducible") {
    CurveParams cp = CurveParams::rescaled(13, 2);
    Report a = group_check(cp, CheckMode::projective, CheckLevel::axioms, 42);
    Report b = group_check(cp, CheckMode::projective, CheckLevel::axioms, 42);
    CHECK(report_to_json(a).dump(2) == report_to_json(b).dump(2));

    nlohmann::json j = report_to_json(a);
    CHECK(j["schema_version"] == SCHEMA_VERSION);
    CHECK(j["all_pass"] == true);
    CHECK(j["p"] == "13");
    CHECK(j["t"] == "2");
    CHECK(j["seed"] == 42);
    CHECK(j["checks"].size() == a.checks.size());
    // affine reports carry no t key
    nlohmann::json ja =
        report_to_json(group_check(CurveParams::general(13, 1, 2), CheckMode::affine,
                                   CheckLevel::axioms));
    CHECK_FALSE(ja.contains("t"));
}
