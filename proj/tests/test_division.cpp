#include "edwards/division.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace edwards;

namespace {

MPoly rnd_poly(const Ctx& c, std::mt19937_64& rng, int terms, int maxdeg) {
    MPoly p = MPoly::zero(c);
    for (int t = 0; t < terms; ++t) {
        Exp e(c->size(), 0);
        for (auto& x : e) x = static_cast<uint32_t>(rng() % (maxdeg + 1));
        p.add_term(e, Rat(Int(rng() % 21) - 10, Int(1 + rng() % 4)));
    }
    return p;
}

bool replays(const MPoly& f, const std::vector<MPoly>& div, const DivisionResult& r) {
    MPoly acc = r.remainder;
    for (size_t i = 0; i < div.size(); ++i) acc = acc + r.cofactors[i] * div[i];
    return acc == f;
}

}

TEST_CASE("division of a generator by itself") {
    Ctx c = VarContext::make({"x", "y"});
    MPoly f = MPoly::parse(c, "x^2*y - 3*x + 1/2");
    auto r = reduce(f, {f}, MonomialOrder{OrderKind::lex});
    CHECK(r.remainder.is_zero());
    CHECK(r.cofactors[0] == MPoly::constant(c, 1));
}

TEST_CASE("textbook lex division") {
    // x^2 y + x y^2 + y^2 by [x y - 1, y^2 - 1], lex x > y
    Ctx c = VarContext::make({"x", "y"});
    MPoly f = MPoly::parse(c, "x^2*y + x*y^2 + y^2");
    std::vector<MPoly> div{MPoly::parse(c, "x*y - 1"), MPoly::parse(c, "y^2 - 1")};
    auto r = reduce(f, div, MonomialOrder{OrderKind::lex});
    CHECK(r.cofactors[0] == MPoly::parse(c, "x + y"));
    CHECK(r.cofactors[1] == MPoly::parse(c, "1"));
    CHECK(r.remainder == MPoly::parse(c, "x + y + 1"));
    CHECK(replays(f, div, r));
}

TEST_CASE("divisor order matters, replay always holds") {
    Ctx c = VarContext::make({"x", "y"});
    MPoly f = MPoly::parse(c, "x^2*y");
    std::vector<MPoly> d1{MPoly::parse(c, "x"), MPoly::parse(c, "x^2")};
    std::vector<MPoly> d2{MPoly::parse(c, "x^2"), MPoly::parse(c, "x")};
    auto r1 = reduce(f, d1, MonomialOrder{OrderKind::lex});
    auto r2 = reduce(f, d2, MonomialOrder{OrderKind::lex});
    CHECK(r1.cofactors[0] == MPoly::parse(c, "x*y"));
    CHECK(r1.cofactors[1].is_zero());
    CHECK(r2.cofactors[0] == MPoly::parse(c, "y"));
    CHECK(r2.cofactors[1].is_zero());
    CHECK(replays(f, d1, r1));
    CHECK(replays(f, d2, r2));
}

TEST_CASE("remainder is in normal form") {
    Ctx c = VarContext::make({"x", "y", "z"});
    std::mt19937_64 rng(7);
    MonomialOrder ord{OrderKind::grevlex};
    for (int iter = 0; iter < 30; ++iter) {
        MPoly f = rnd_poly(c, rng, 8, 3);
        std::vector<MPoly> div;
        for (int k = 0; k < 3; ++k) {
            MPoly g = rnd_poly(c, rng, 3, 2);
            if (!g.is_zero()) div.push_back(g);
        }
        if (div.empty()) continue;
        auto r = reduce(f, div, ord);
        CHECK(replays(f, div, r));
        for (auto& [e, q] : r.remainder.terms()) {
            (void)q;
            for (auto& g : div)
                CHECK_FALSE(exp_divides(g.leading_exp(ord), e));
        }
    }
}

TEST_CASE("division errors") {
    Ctx c = VarContext::make({"x"});
    MPoly f = MPoly::parse(c, "x");
    CHECK_THROWS_AS(reduce(f, {MPoly::zero(c)}, MonomialOrder{OrderKind::lex}),
                    DivisionByZero);
    Ctx other = VarContext::make({"y"});
    CHECK_THROWS_AS(reduce(f, {MPoly::var(other, "y")}, MonomialOrder{OrderKind::lex}),
                    ContextMismatch);
}
