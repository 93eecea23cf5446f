#pragma once

#include "edwards/mpoly.hpp"

namespace edwards {

// A fraction num/den of polynomials, den nonzero. Elements of localizations
// R[1/delta] are carried in this form; no gcd cancellation is ever applied,
// so den stays a product of the factors that were actually cleared.
struct RationalPair {
    MPoly num;
    MPoly den;

    RationalPair(MPoly n, MPoly d) : num(std::move(n)), den(std::move(d)) {
        require_same_context(num.ctx(), den.ctx(), "RationalPair");
        if (den.is_zero()) throw DivisionByZero("RationalPair: zero denominator");
    }

    static RationalPair of(MPoly n) {
        MPoly one = MPoly::constant(n.ctx(), 1);
        return RationalPair(std::move(n), std::move(one));
    }

    friend bool operator==(const RationalPair& a, const RationalPair& b) {
        return a.num == b.num && a.den == b.den;
    }
};

// Cross-multiplied difference a - b, no cancellation: two representations of
// one rational function subtract to a pair with identically zero numerator.
inline RationalPair rational_sub_simplify(const RationalPair& a, const RationalPair& b) {
    require_same_context(a.num.ctx(), b.num.ctx(), "rational_sub_simplify");
    return RationalPair(a.num * b.den - b.num * a.den, a.den * b.den);
}

// A curve point with both coordinates in fraction form.
struct SymPoint {
    RationalPair x;
    RationalPair y;
};

}
