#pragma once

#include "edwards/errors.hpp"
#include "edwards/ffield.hpp"

#include <optional>
#include <string>
#include <vector>

namespace edwards {

// Concrete curve x^2 + c y^2 = 1 + d x^2 y^2 over F_p. The rescaled form
// fixes c = 1, d = t^2 and additionally carries t for the symmetry tau.
struct CurveParams {
    PrimeField field;
    FieldElement c, d;
    std::optional<FieldElement> t;

    static CurveParams general(const Int& p, const Int& c, const Int& d) {
        PrimeField f(p);
        return {f, f.elem(c), f.elem(d), std::nullopt};
    }

    static CurveParams rescaled(const Int& p, const Int& t) {
        PrimeField f(p);
        FieldElement te = f.elem(t);
        if (te.is_zero() || te == f.one() || te == -f.one())
            throw HypothesisViolated("rescaled form needs t not in {0, 1, -1}");
        return {f, f.one(), te * te, te};
    }

    bool rescaled_form() const { return t.has_value(); }

    const FieldElement& tau_scale() const {
        if (!t) throw ModeMismatch("tau/plus1 need the rescaled form");
        return *t;
    }
};

struct AffinePoint {
    FieldElement x, y;

    friend bool operator==(const AffinePoint& a, const AffinePoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const AffinePoint& a, const AffinePoint& b) { return !(a == b); }
    friend bool operator<(const AffinePoint& a, const AffinePoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

inline std::string point_str(const AffinePoint& P) {
    return "(" + P.x.str() + "," + P.y.str() + ")";
}

inline bool on_curve(const AffinePoint& P, const CurveParams& cp) {
    FieldElement x2 = P.x * P.x, y2 = P.y * P.y;
    return (x2 + cp.c * y2 - cp.field.one() - cp.d * x2 * y2).is_zero();
}

inline void require_on_curve(const AffinePoint& P, const CurveParams& cp, const char* where) {
    if (!on_curve(P, cp))
        throw NotOnCurve(std::string(where) + ": " + point_str(P) + " is not on the curve");
}

// E_oo: both coordinates nonzero (the domain of tau)
inline bool in_oo(const AffinePoint& P) { return !P.x.is_zero() && !P.y.is_zero(); }

inline FieldElement delta_plus(const AffinePoint& P, const AffinePoint& Q,
                               const CurveParams& cp) {
    return cp.field.one() + cp.d * P.x * P.y * Q.x * Q.y;
}

inline FieldElement delta_minus(const AffinePoint& P, const AffinePoint& Q,
                                const CurveParams& cp) {
    return cp.field.one() - cp.d * P.x * P.y * Q.x * Q.y;
}

inline FieldElement delta0(const AffinePoint& P, const AffinePoint& Q, const CurveParams& cp) {
    return delta_plus(P, Q, cp) * delta_minus(P, Q, cp);
}

inline FieldElement delta1x(const AffinePoint& P, const AffinePoint& Q, const CurveParams&) {
    return Q.x * P.y - P.x * Q.y;
}

inline FieldElement delta1y(const AffinePoint& P, const AffinePoint& Q, const CurveParams&) {
    return P.x * Q.x + P.y * Q.y;
}

inline FieldElement delta1(const AffinePoint& P, const AffinePoint& Q, const CurveParams& cp) {
    return delta1x(P, Q, cp) * delta1y(P, Q, cp);
}

inline AffinePoint add0(const AffinePoint& P, const AffinePoint& Q, const CurveParams& cp) {
    require_on_curve(P, cp, "add0");
    require_on_curve(Q, cp, "add0");
    FieldElement dm = delta_minus(P, Q, cp), dp = delta_plus(P, Q, cp);
    if (dm.is_zero() || dp.is_zero())
        throw NotSummable("add0: delta vanishes at " + point_str(P) + ", " + point_str(Q));
    return {(P.x * Q.x - cp.c * P.y * Q.y) / dm, (P.x * Q.y + P.y * Q.x) / dp};
}

inline AffinePoint add1(const AffinePoint& P, const AffinePoint& Q, const CurveParams& cp) {
    cp.tau_scale();
    require_on_curve(P, cp, "add1");
    require_on_curve(Q, cp, "add1");
    FieldElement dx = delta1x(P, Q, cp), dy = delta1y(P, Q, cp);
    if (dx.is_zero() || dy.is_zero())
        throw NotSummable("add1: delta' vanishes at " + point_str(P) + ", " + point_str(Q));
    return {(P.x * P.y - Q.x * Q.y) / dx, (P.x * P.y + Q.x * Q.y) / dy};
}

inline AffinePoint add_by_law(int l, const AffinePoint& P, const AffinePoint& Q,
                              const CurveParams& cp) {
    return l == 0 ? add0(P, Q, cp) : add1(P, Q, cp);
}

inline AffinePoint iota(const AffinePoint& P) { return {P.x, -P.y}; }

inline AffinePoint rho(const AffinePoint& P) { return {-P.y, P.x}; }

inline AffinePoint tau(const AffinePoint& P, const CurveParams& cp) {
    const FieldElement& t = cp.tau_scale();
    if (!in_oo(P)) throw TauOffDomain("tau undefined at " + point_str(P));
    return {(t * P.x).inv(), (t * P.y).inv()};
}

// g = tau^b rho^k, the 8 elements of G
inline AffinePoint apply_sym(bool use_tau, int k, const AffinePoint& P, const CurveParams& cp) {
    AffinePoint r = P;
    for (int i = 0; i < (k & 3); ++i) r = rho(r);
    return use_tau ? tau(r, cp) : r;
}

// Lemma case split for a pair of on-curve points: either some delta_l is
// nonzero (preferring l = 0), or P is in E_oo and Q = tau rho^k iota P.
struct Dichotomy {
    bool summable;
    int l; // law index, valid when summable
    int k; // g = tau rho^k, valid when not
};

inline Dichotomy dichotomy(const AffinePoint& P, const AffinePoint& Q, const CurveParams& cp) {
    cp.tau_scale();
    require_on_curve(P, cp, "dichotomy");
    require_on_curve(Q, cp, "dichotomy");
    if (!delta0(P, Q, cp).is_zero()) return {true, 0, 0};
    if (!delta1(P, Q, cp).is_zero()) return {true, 1, 0};
    if (in_oo(P))
        for (int k = 0; k < 4; ++k)
            if (apply_sym(true, k, iota(P), cp) == Q) return {false, 0, k};
    // the dichotomy lemma rules this out for on-curve inputs
    throw EdwardsError("dichotomy: no case applies at " + point_str(P) + ", " + point_str(Q));
}

inline std::vector<AffinePoint> enumerate_affine(const CurveParams& cp) {
    std::vector<AffinePoint> pts;
    const Int& p = cp.field.modulus();
    for (Int x = 0; x < p; ++x)
        for (Int y = 0; y < p; ++y) {
            AffinePoint P{cp.field.elem(x), cp.field.elem(y)};
            if (on_curve(P, cp)) pts.push_back(P);
        }
    return pts;
}

} // namespace edwards
