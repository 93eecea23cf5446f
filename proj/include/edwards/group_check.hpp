#pragma once

#include "edwards/proj.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace edwards {

enum class CheckMode { affine, projective };
enum class CheckLevel { axioms, full };

inline std::string mode_name(CheckMode m) {
    return m == CheckMode::affine ? "affine" : "projective";
}

inline std::string level_name(CheckLevel l) {
    return l == CheckLevel::full ? "full" : "axioms";
}

struct CheckResult {
    std::string name;
    bool pass = true;
    std::uint64_t checked = 0;
    std::string witness; // first failing tuple, empty on pass
};

struct Report {
    std::string mode;
    std::string level;
    Int p;
    Int c, d;
    std::optional<Int> t;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline void record(CheckResult& chk, bool ok, const std::string& witness) {
    ++chk.checked;
    if (!ok && chk.pass) {
        chk.pass = false;
        chk.witness = witness;
    }
}

// Exhaustive triples up to 64 elements, else a 1000-triple seeded sample.
template <typename Elem, typename AssocOk, typename Str>
void check_assoc(Report& rep, const std::vector<Elem>& elems, CheckLevel level,
                 std::uint64_t seed, AssocOk&& ok, Str&& str) {
    CheckResult chk{"associativity", true, 0, ""};
    size_t n = elems.size();
    auto wit = [&](const Elem& a, const Elem& b, const Elem& c) {
        return str(a) + ", " + str(b) + ", " + str(c);
    };
    if (level == CheckLevel::full && n <= 64) {
        for (const Elem& a : elems)
            for (const Elem& b : elems)
                for (const Elem& c : elems) record(chk, ok(a, b, c), wit(a, b, c));
    } else {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < 1000; ++i) {
            const Elem& a = elems[rng() % n];
            const Elem& b = elems[rng() % n];
            const Elem& c = elems[rng() % n];
            record(chk, ok(a, b, c), wit(a, b, c));
        }
    }
    rep.checks.push_back(std::move(chk));
}

inline void affine_checks(Report& rep, const CurveParams& cp, CheckLevel level,
                          std::uint64_t seed) {
    if (!is_square(cp.c))
        throw HypothesisViolated("affine group law needs c square, c = " + cp.c.str());
    if (is_square(cp.d))
        throw HypothesisViolated("affine group law needs d nonsquare, d = " + cp.d.str());

    std::vector<AffinePoint> pts = enumerate_affine(cp);
    AffinePoint e{cp.field.one(), cp.field.zero()};
    auto pair_str = [](const AffinePoint& P, const AffinePoint& Q) {
        return point_str(P) + ", " + point_str(Q);
    };

    CheckResult dnv{"delta_nonvanishing", true, 0, ""};
    for (const AffinePoint& P : pts)
        for (const AffinePoint& Q : pts)
            record(dnv, !delta_plus(P, Q, cp).is_zero() && !delta_minus(P, Q, cp).is_zero(),
                   pair_str(P, Q));
    rep.checks.push_back(std::move(dnv));

    CheckResult clo{"closure", true, 0, ""};
    CheckResult com{"commutativity", true, 0, ""};
    for (const AffinePoint& P : pts)
        for (const AffinePoint& Q : pts) {
            AffinePoint S = add0(P, Q, cp);
            record(clo, on_curve(S, cp), pair_str(P, Q));
            record(com, S == add0(Q, P, cp), pair_str(P, Q));
        }
    rep.checks.push_back(std::move(clo));
    rep.checks.push_back(std::move(com));

    CheckResult idn{"identity", true, 0, ""};
    CheckResult inv{"inverse", true, 0, ""};
    for (const AffinePoint& P : pts) {
        record(idn, add0(P, e, cp) == P && add0(e, P, cp) == P, point_str(P));
        record(inv, add0(P, iota(P), cp) == e, point_str(P));
    }
    rep.checks.push_back(std::move(idn));
    rep.checks.push_back(std::move(inv));

    check_assoc(
        rep, pts, level, seed,
        [&](const AffinePoint& a, const AffinePoint& b, const AffinePoint& c) {
            return add0(add0(a, b, cp), c, cp) == add0(a, add0(b, c, cp), cp);
        },
        [](const AffinePoint& P) { return point_str(P); });
}

inline void projective_checks(Report& rep, const CurveParams& cp, CheckLevel level,
                              std::uint64_t seed) {
    std::vector<PointClass> cls = enumerate_classes(cp);
    std::vector<AffinePoint> pts = enumerate_affine(cp);
    PointClass id = class_identity(cp);
    auto pair_str = [](const PointClass& A, const PointClass& B) {
        return class_str(A) + ", " + class_str(B);
    };

    // closure doubles as totality: every pair must yield an unambiguous class
    CheckResult clo{"closure", true, 0, ""};
    CheckResult com{"commutativity", true, 0, ""};
    for (const PointClass& A : cls)
        for (const PointClass& B : cls) {
            try {
                PointClass AB = proj_add(A, B, cp);
                record(clo, true, "");
                record(com, AB == proj_add(B, A, cp), pair_str(A, B));
            } catch (const EdwardsError& e) {
                record(clo, false, pair_str(A, B) + ": " + e.what());
                record(com, false, pair_str(A, B));
            }
        }
    rep.checks.push_back(std::move(clo));
    rep.checks.push_back(std::move(com));

    CheckResult idn{"identity", true, 0, ""};
    CheckResult inv{"inverse", true, 0, ""};
    for (const PointClass& A : cls) {
        record(idn, proj_add(A, id, cp) == A && proj_add(id, A, cp) == A, class_str(A));
        record(inv, proj_add(A, proj_neg(A, cp), cp) == id, class_str(A));
    }
    rep.checks.push_back(std::move(idn));
    rep.checks.push_back(std::move(inv));

    check_assoc(
        rep, cls, level, seed,
        [&](const PointClass& a, const PointClass& b, const PointClass& c) {
            return proj_add(proj_add(a, b, cp), c, cp) == proj_add(a, proj_add(b, c, cp), cp);
        },
        [](const PointClass& A) { return class_str(A); });

    CheckResult eqv{"equivariance", true, 0, ""};
    for (const PointClass& A : cls)
        for (const PointClass& B : cls) {
            PointClass AB = proj_add(A, B, cp);
            bool ok = proj_add(apply_rho_class(A, cp), B, cp) == apply_rho_class(AB, cp) &&
                      proj_add(apply_tau_class(A, cp), B, cp) == apply_tau_class(AB, cp);
            record(eqv, ok, pair_str(A, B));
        }
    rep.checks.push_back(std::move(eqv));

    CheckResult fpf{"fixed_point_freeness", true, 0, ""};
    for (const AffinePoint& P : pts) {
        if (!in_oo(P)) continue;
        for (int b = 0; b < 2; ++b)
            for (int k = 0; k < 4; ++k) {
                if (!b && !k) continue;
                record(fpf, apply_sym(b, k, P, cp) != P,
                       "g=tau^" + std::to_string(b) + " rho^" + std::to_string(k) + " at " +
                           point_str(P));
            }
    }
    rep.checks.push_back(std::move(fpf));

    CheckResult dic{"dichotomy_totality", true, 0, ""};
    for (const AffinePoint& P : pts)
        for (const AffinePoint& Q : pts) {
            std::string wit = point_str(P) + ", " + point_str(Q);
            try {
                Dichotomy dc = dichotomy(P, Q, cp);
                bool ok;
                if (dc.summable)
                    ok = dc.l == 0 ? !delta0(P, Q, cp).is_zero() : !delta1(P, Q, cp).is_zero();
                else
                    ok = in_oo(P) && apply_sym(true, dc.k, iota(P), cp) == Q;
                record(dic, ok, wit);
            } catch (const EdwardsError& e) {
                record(dic, false, wit + ": " + e.what());
            }
        }
    rep.checks.push_back(std::move(dic));

    // The eight delta nonvanishing relations. Each quantifies over the
    // tuples where its tau arguments are defined; relations 5-8 compare the
    // sum against iota of its second summand under both delta sorts.
    CheckResult rows[9];
    for (int r = 1; r <= 8; ++r)
        rows[r] = CheckResult{"delta_relation_" + std::to_string(r), true, 0, ""};
    for (const AffinePoint& P1 : pts)
        for (const AffinePoint& P2 : pts) {
            std::string wit = point_str(P1) + ", " + point_str(P2);
            if (in_oo(P1) && in_oo(P2)) {
                AffinePoint tP1 = tau(P1, cp), tP2 = tau(P2, cp);
                record(rows[1],
                       delta0(tP1, tP2, cp).is_zero() || !delta0(P1, P2, cp).is_zero(), wit);
                record(rows[2],
                       delta1(tP1, tP2, cp).is_zero() || !delta1(P1, P2, cp).is_zero(), wit);
            }
            if (!in_oo(P2)) continue;
            AffinePoint tP2 = tau(P2, cp);
            AffinePoint iP2 = iota(P2);
            AffinePoint tiP2 = tau(iP2, cp);
            record(rows[3],
                   delta0(P1, P2, cp).is_zero() || delta0(P1, tP2, cp).is_zero() ||
                       !delta1(P1, P2, cp).is_zero(),
                   wit);
            record(rows[4],
                   delta1(P1, P2, cp).is_zero() || delta1(P1, tP2, cp).is_zero() ||
                       !delta0(P1, P2, cp).is_zero(),
                   wit);
            if (!delta1(P1, P2, cp).is_zero()) {
                AffinePoint S = add1(P1, P2, cp);
                record(rows[5],
                       delta1(S, tiP2, cp).is_zero() || !delta0(S, iP2, cp).is_zero(), wit);
                record(rows[8],
                       delta0(S, tiP2, cp).is_zero() || !delta1(S, iP2, cp).is_zero(), wit);
            }
            if (!delta0(P1, P2, cp).is_zero()) {
                AffinePoint S = add0(P1, P2, cp);
                record(rows[6],
                       delta0(S, tiP2, cp).is_zero() || !delta1(S, iP2, cp).is_zero(), wit);
                record(rows[7],
                       delta1(S, tiP2, cp).is_zero() || !delta0(S, iP2, cp).is_zero(), wit);
            }
        }

    for (int r = 1; r <= 8; ++r) rep.checks.push_back(std::move(rows[r]));

    CheckResult semi{"semi", true, 0, ""};
    for (const AffinePoint& P : pts)
        for (const AffinePoint& Q : pts) {
            PointClass A = glue(P, 0, cp), B = glue(Q, 0, cp), NB = glue(iota(Q), 0, cp);
            record(semi, proj_add(proj_add(A, B, cp), NB, cp) == A,
                   point_str(P) + ", " + point_str(Q));
        }
    rep.checks.push_back(std::move(semi));
}

} // namespace detail

inline Report group_check(const CurveParams& cp, CheckMode mode, CheckLevel level,
                          std::uint64_t seed = 0) {
    Report rep;
    rep.mode = mode_name(mode);
    rep.level = level_name(level);
    rep.p = cp.field.modulus();
    rep.c = cp.c.value();
    rep.d = cp.d.value();
    if (cp.t) rep.t = cp.t->value();
    rep.seed = seed;
    if (mode == CheckMode::projective) {
        if (!cp.rescaled_form())
            throw HypothesisViolated("projective mode needs the rescaled form (give t)");
        detail::projective_checks(rep, cp, level, seed);
    } else {
        detail::affine_checks(rep, cp, level, seed);
    }
    return rep;
}

} // namespace edwards
