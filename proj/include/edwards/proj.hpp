#pragma once

#include "edwards/curve.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace edwards {

// A point of E = E_aff x {0,1} / ~, where [P,i] ~ [tau P, i+1] for P in E_oo.
struct ProjPoint {
    AffinePoint p;
    int i; // 0 or 1

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.i == b.i && a.p == b.p;
    }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        if (a.i != b.i) return a.i < b.i;
        return a.p < b.p;
    }
};

inline std::string proj_str(const ProjPoint& P) {
    return "[" + point_str(P.p) + "," + std::to_string(P.i) + "]";
}

// An equivalence class, stored as its full member list in ascending order.
// Classes have one member (P not in E_oo) or two (P in E_oo).
struct PointClass {
    std::vector<ProjPoint> members;

    const ProjPoint& rep() const { return members.front(); }

    friend bool operator==(const PointClass& a, const PointClass& b) {
        return a.members == b.members;
    }
    friend bool operator!=(const PointClass& a, const PointClass& b) { return !(a == b); }
    friend bool operator<(const PointClass& a, const PointClass& b) {
        return a.members < b.members;
    }
};

inline std::string class_str(const PointClass& A) {
    std::string s = "{";
    for (size_t i = 0; i < A.members.size(); ++i) {
        if (i) s += ",";
        s += proj_str(A.members[i]);
    }
    return s + "}";
}

inline PointClass glue(const AffinePoint& P, int i, const CurveParams& cp) {
    require_on_curve(P, cp, "glue");
    PointClass cls;
    cls.members.push_back({P, i & 1});
    if (in_oo(P)) cls.members.push_back({tau(P, cp), (i + 1) & 1});
    std::sort(cls.members.begin(), cls.members.end());
    return cls;
}

inline PointClass class_identity(const CurveParams& cp) {
    return glue({cp.field.one(), cp.field.zero()}, 0, cp);
}

inline PointClass proj_neg(const PointClass& A, const CurveParams& cp) {
    return glue(iota(A.rep().p), A.rep().i, cp);
}

// rho acts coordinatewise, tau flips the sheet index.
inline PointClass apply_rho_class(const PointClass& A, const CurveParams& cp) {
    return glue(rho(A.rep().p), A.rep().i, cp);
}

inline PointClass apply_tau_class(const PointClass& A, const CurveParams& cp) {
    return glue(A.rep().p, A.rep().i + 1, cp);
}

inline PointClass apply_sym_class(bool use_tau, int k, const PointClass& A,
                                  const CurveParams& cp) {
    PointClass r = A;
    for (int i = 0; i < (k & 3); ++i) r = apply_rho_class(r, cp);
    return use_tau ? apply_tau_class(r, cp) : r;
}

// Class addition: try every representative pair and every law whose deltas
// are nonzero, glue each candidate sum, and insist all candidates agree.
inline PointClass proj_add(const PointClass& A, const PointClass& B, const CurveParams& cp) {
    cp.tau_scale();
    bool have = false;
    PointClass out;
    for (const ProjPoint& a : A.members)
        for (const ProjPoint& b : B.members)
            for (int l = 0; l < 2; ++l) {
                FieldElement d = l == 0 ? delta0(a.p, b.p, cp) : delta1(a.p, b.p, cp);
                if (d.is_zero()) continue;
                PointClass cand = glue(add_by_law(l, a.p, b.p, cp), a.i + b.i, cp);
                if (!have) {
                    out = cand;
                    have = true;
                } else if (cand != out) {
                    throw Ambiguous("proj_add: rules disagree at " + class_str(A) + " + " +
                                    class_str(B));
                }
            }
    if (!have)
        throw NoRuleApplies("proj_add: no rule applies at " + class_str(A) + " + " +
                            class_str(B));
    return out;
}

inline std::vector<PointClass> enumerate_classes(const CurveParams& cp) {
    std::set<PointClass> seen;
    for (const AffinePoint& P : enumerate_affine(cp))
        for (int i = 0; i < 2; ++i) seen.insert(glue(P, i, cp));
    return {seen.begin(), seen.end()};
}

} // namespace edwards
