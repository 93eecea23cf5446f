#include "edwards/groebner.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace edwards;

namespace {

bool in_ideal(const MPoly& f, const std::vector<MPoly>& gb, const MonomialOrder& ord) {
    return reduce(f, gb, ord).remainder.is_zero();
}

MPoly spoly(const MPoly& f, const MPoly& g, const MonomialOrder& ord) {
    Exp lf = f.leading_exp(ord), lg = g.leading_exp(ord);
    Exp l = exp_lcm(lf, lg);
    MPoly a = MPoly::term(f.ctx(), exp_quot(l, lf), Rat(1) / f.leading_coeff(ord));
    MPoly b = MPoly::term(g.ctx(), exp_quot(l, lg), Rat(1) / g.leading_coeff(ord));
    return a * f - b * g;
}

void check_is_groebner(const std::vector<MPoly>& gb, const MonomialOrder& ord) {
    for (size_t i = 0; i < gb.size(); ++i)
        for (size_t j = i + 1; j < gb.size(); ++j)
            CHECK(reduce(spoly(gb[i], gb[j], ord), gb, ord).remainder.is_zero());
}

void check_repr(const ExtendedGB& ext, const std::vector<MPoly>& gens) {
    REQUIRE(ext.repr.size() == ext.basis.size());
    for (size_t i = 0; i < ext.basis.size(); ++i) {
        REQUIRE(ext.repr[i].size() == gens.size());
        MPoly acc = MPoly::zero(gens[0].ctx());
        for (size_t j = 0; j < gens.size(); ++j) acc = acc + ext.repr[i][j] * gens[j];
        CHECK(acc == ext.basis[i]);
    }
}

}

TEST_CASE("groebner basics") {
    Ctx c = VarContext::make({"x1"});
    MonomialOrder lex{OrderKind::lex};

    auto g1 = groebner({MPoly::parse(c, "x1")}, lex);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0] == MPoly::parse(c, "x1"));

    auto g2 = groebner({MPoly::parse(c, "x1^2 - 1"), MPoly::parse(c, "x1 - 1")}, lex);
    REQUIRE(g2.size() == 1);
    CHECK(g2[0] == MPoly::parse(c, "x1 - 1"));
}

TEST_CASE("textbook grevlex basis") {
    // <x^3 - 2 x y, x^2 y - 2 y^2 + x>, grevlex x > y
    Ctx c = VarContext::make({"x", "y"});
    MonomialOrder ord{OrderKind::grevlex};
    std::vector<MPoly> gens{MPoly::parse(c, "x^3 - 2*x*y"),
                            MPoly::parse(c, "x^2*y - 2*y^2 + x")};
    auto ext = groebner_extended(gens, ord);
    check_is_groebner(ext.basis, ord);
    check_repr(ext, gens);

    // sorted ascending by leading monomial
    std::vector<MPoly> expect{MPoly::parse(c, "y^2 - 1/2*x"), MPoly::parse(c, "x*y"),
                              MPoly::parse(c, "x^2")};
    REQUIRE(ext.basis.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i) CHECK(ext.basis[i] == expect[i]);

    for (auto& g : gens) CHECK(in_ideal(g, ext.basis, ord));
}

TEST_CASE("lex elimination") {
    // <x^2 + y^2 - 1, x - y> lex: eliminating x leaves 2 y^2 - 1
    Ctx c = VarContext::make({"x", "y"});
    MonomialOrder lex{OrderKind::lex};
    std::vector<MPoly> gens{MPoly::parse(c, "x^2 + y^2 - 1"), MPoly::parse(c, "x - y")};
    auto gb = groebner(gens, lex);
    check_is_groebner(gb, lex);
    CHECK(in_ideal(MPoly::parse(c, "y^2 - 1/2"), gb, lex));
    CHECK_FALSE(in_ideal(MPoly::parse(c, "y - 1"), gb, lex));
}

TEST_CASE("membership decided stably across generator order") {
    Ctx c = VarContext::make({"x", "y", "z"});
    MonomialOrder ord{OrderKind::grevlex};
    std::vector<MPoly> gens{MPoly::parse(c, "x*y - z"), MPoly::parse(c, "y*z - x"),
                            MPoly::parse(c, "x*z - y")};
    MPoly member = MPoly::parse(c, "x^2 - z^2") * MPoly::parse(c, "y") +
                   MPoly::parse(c, "z") * gens[0];
    // x^2 y - y z^2 = x(xy - z) + z(x - yz) so the first factor is in the ideal
    std::vector<MPoly> perm{gens[2], gens[0], gens[1]};
    for (auto& gs : {gens, perm}) {
        auto gb = groebner(gs, ord);
        check_is_groebner(gb, ord);
        CHECK(in_ideal(member, gb, ord));
        CHECK_FALSE(in_ideal(MPoly::parse(c, "x"), gb, ord));
    }
}

TEST_CASE("extended representation on a curve system") {
    // the rescaled curve pair with a shared zero locus relation
    Ctx c = VarContext::make({"x0", "y0", "x1", "y1", "t"});
    MonomialOrder lex{OrderKind::lex};
    std::vector<MPoly> gens{
        MPoly::parse(c, "x0^2 + y0^2 - 1 - t^2*x0^2*y0^2"),
        MPoly::parse(c, "x1^2 + y1^2 - 1 - t^2*x1^2*y1^2"),
        MPoly::parse(c, "x0*y0 - x1*y1"),
    };
    auto ext = groebner_extended(gens, lex);
    check_is_groebner(ext.basis, lex);
    check_repr(ext, gens);
    for (auto& g : gens) CHECK(in_ideal(g, ext.basis, lex));
}
