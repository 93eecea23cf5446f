#include "edwards/proj.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

using namespace edwards;

static AffinePoint pt(const CurveParams& cp, long x, long y) {
    return {cp.field.elem(x), cp.field.elem(y)};
}

static int order_of(const PointClass& A, const PointClass& id, const CurveParams& cp) {
    PointClass acc = A;
    int n = 1;
    while (acc != id) {
        acc = proj_add(acc, A, cp);
        ++n;
        REQUIRE(n <= 64);
    }
    return n;
}

TEST_CASE("gluing") {
    CurveParams cp = CurveParams::rescaled(13, 2);

    PointClass one = glue(pt(cp, 0, 1), 0, cp);
    CHECK(one.members.size() == 1);
    CHECK(one.rep() == ProjPoint{pt(cp, 0, 1), 0});

    // an E_oo point glues to a 2-element class, equal from either side
    std::vector<AffinePoint> pts = enumerate_affine(cp);
    for (const AffinePoint& P : pts) {
        for (int i = 0; i < 2; ++i) {
            PointClass A = glue(P, i, cp);
            CHECK(A.members.size() == (in_oo(P) ? 2u : 1u));
            if (in_oo(P)) CHECK(A == glue(tau(P, cp), i + 1, cp));
        }
    }
    CHECK_THROWS_AS(glue(pt(cp, 2, 2), 0, cp), NotOnCurve);

    CHECK(class_str(class_identity(cp)) == "{[(1,0),0]}");
}

TEST_CASE("class counts") {
    CHECK(enumerate_classes(CurveParams::rescaled(13, 2)).size() == 16);
    CHECK(enumerate_classes(CurveParams::rescaled(17, 2)).size() == 16);
    CHECK(enumerate_classes(CurveParams::rescaled(29, 3)).size() == 24);

    // every E_oo point sits in exactly one 2-element class
    CurveParams cp = CurveParams::rescaled(13, 2);
    std::map<std::pair<Int, Int>, int> seen;
    for (const PointClass& A : enumerate_classes(cp))
        for (const ProjPoint& m : A.members)
            if (in_oo(m.p)) ++seen[{m.p.x.value(), m.p.y.value()}];
    for (const AffinePoint& P : enumerate_affine(cp))
        if (in_oo(P)) CHECK(seen[{P.x.value(), P.y.value()}] == 2); // once per sheet
}

TEST_CASE("negation and symmetries on classes") {
    CurveParams cp = CurveParams::rescaled(13, 2);
    for (const PointClass& A : enumerate_classes(cp)) {
        PointClass N = proj_neg(A, cp);
        // memberwise iota, same sheet indices
        REQUIRE(N.members.size() == A.members.size());
        for (const ProjPoint& m : A.members) {
            ProjPoint im{iota(m.p), m.i};
            CHECK(std::find(N.members.begin(), N.members.end(), im) != N.members.end());
        }
        CHECK(proj_neg(N, cp) == A);
        CHECK(apply_tau_class(apply_tau_class(A, cp), cp) == A);
        CHECK(apply_sym_class(false, 4, A, cp) == A);
        CHECK(apply_sym_class(true, 0, A, cp) == apply_tau_class(A, cp));
    }
}

TEST_CASE("class addition") {
    CurveParams cp = CurveParams::rescaled(13, 2);
    std::vector<PointClass> cls = enumerate_classes(cp);
    PointClass id = class_identity(cp);

    for (const PointClass& A : cls) {
        CHECK(proj_add(A, id, cp) == A);
        CHECK(proj_add(A, proj_neg(A, cp), cp) == id);
        for (const PointClass& B : cls) CHECK(proj_add(A, B, cp) == proj_add(B, A, cp));
    }

    // a pair that no affine law can add still adds on classes: with
    // Q = tau rho^k iota P every delta vanishes, but the second sheet steps in
    std::vector<AffinePoint> pts = enumerate_affine(cp);
    size_t rescued = 0;
    for (const AffinePoint& P : pts) {
        if (!in_oo(P)) continue;
        for (int k = 0; k < 4; ++k) {
            AffinePoint Q = apply_sym(true, k, iota(P), cp);
            REQUIRE(delta0(P, Q, cp).is_zero());
            REQUIRE(delta1(P, Q, cp).is_zero());
            PointClass S = proj_add(glue(P, 0, cp), glue(Q, 0, cp), cp);
            CHECK(on_curve(S.rep().p, cp));
            ++rescued;
        }
    }
    CHECK(rescued == 32);
}

TEST_CASE("group structure") {
    // element order profiles pin the isomorphism type
    struct Row {
        long p, t;
        std::map<int, int> orders;
    };
    std::vector<Row> rows = {
        {13, 2, {{1, 1}, {2, 3}, {4, 4}, {8, 8}}},                     // Z8 x Z2
        {17, 2, {{1, 1}, {2, 3}, {4, 12}}},                            // Z4 x Z4
        {29, 3, {{1, 1}, {2, 3}, {3, 2}, {4, 4}, {6, 6}, {12, 8}}},    // Z12 x Z2
    };
    for (const Row& r : rows) {
        CurveParams cp = CurveParams::rescaled(r.p, r.t);
        PointClass id = class_identity(cp);
        std::map<int, int> got;
        for (const PointClass& A : enumerate_classes(cp)) ++got[order_of(A, id, cp)];
        CHECK(got == r.orders);
    }
}
