#pragma once

#include "edwards/rational_pair.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace edwards {

enum class CurveForm { general, rescaled };

// Pairwise denominators for the first two slots, plus the cleared
// associativity denominators when a third slot is present.
struct DeltaRecord {
    MPoly delta_plus;   // 1 + d x1 y1 x2 y2
    MPoly delta_minus;  // 1 - d x1 y1 x2 y2
    MPoly delta;        // delta_plus * delta_minus
    MPoly delta1x;      // x2 y1 - x1 y2
    MPoly delta1y;      // x1 x2 + y1 y2
    MPoly delta1;       // delta1x * delta1y
    std::optional<MPoly> Dx, Dy;
};

enum class AddLaw { plus0, plus1 };

// The symbolic side of the curve: a variable context holding point slots and
// the curve parameters, with builders for e, the deltas, both addition laws
// and the symmetries, all in exact fraction form.
class SymbolicCurve {
public:
    // slots labelled 1..n; variables x1..xn, y1..yn, x's before y's per pair
    // of leading slots, matching the division variable lists in use
    static SymbolicCurve general(int n) {
        return SymbolicCurve(CurveForm::general, standard_labels(n),
                             standard_names(n, {"c", "d"}));
    }

    static SymbolicCurve rescaled(int n) {
        return SymbolicCurve(CurveForm::rescaled, standard_labels(n),
                             standard_names(n, {"t"}));
    }

    // slots labelled 0,1; grouped by point, the order used for the S+- bases
    static SymbolicCurve dichotomy() {
        return SymbolicCurve(CurveForm::rescaled, {0, 1},
                             {"x0", "y0", "x1", "y1", "t"});
    }

    // slots 1,2 plus fresh inverse witnesses qx, qy
    static SymbolicCurve inverse_unique() {
        return SymbolicCurve(CurveForm::rescaled, {1, 2},
                             {"x1", "x2", "y1", "y2", "qx", "qy", "t"});
    }

    CurveForm form() const { return form_; }
    const Ctx& ctx() const { return ctx_; }
    int slot_count() const { return static_cast<int>(labels_.size()); }

    const MPoly& c() const { return c_; }
    const MPoly& d() const { return d_; }
    const MPoly& t() const {
        if (form_ != CurveForm::rescaled)
            throw ModeMismatch("t is only defined on the rescaled curve");
        return t_;
    }

    MPoly poly(const std::string& text) const { return MPoly::parse(ctx_, text); }

    MPoly xv(int slot) const { return MPoly::var(ctx_, "x" + std::to_string(check(slot))); }
    MPoly yv(int slot) const { return MPoly::var(ctx_, "y" + std::to_string(check(slot))); }

    SymPoint point(int slot) const {
        return {RationalPair::of(xv(slot)), RationalPair::of(yv(slot))};
    }

    // e_slot = x^2 + c y^2 - 1 - d x^2 y^2 at the slot variables
    MPoly curve(int slot) const {
        MPoly x = xv(slot), y = yv(slot);
        return x * x + c_ * y * y - MPoly::constant(ctx_, 1) - d_ * x * x * y * y;
    }

    // e at an arbitrary fraction point
    RationalPair curve_at(const SymPoint& P) const {
        MPoly nx2 = P.x.num * P.x.num, dx2 = P.x.den * P.x.den;
        MPoly ny2 = P.y.num * P.y.num, dy2 = P.y.den * P.y.den;
        return RationalPair(nx2 * dy2 + c_ * ny2 * dx2 - dx2 * dy2 - d_ * nx2 * ny2,
                            dx2 * dy2);
    }

    RationalPair delta_plus_at(const SymPoint& P, const SymPoint& Q) const {
        MPoly D = dens(P, Q), N = nums(P, Q);
        return RationalPair(D + d_ * N, D);
    }

    RationalPair delta_minus_at(const SymPoint& P, const SymPoint& Q) const {
        MPoly D = dens(P, Q), N = nums(P, Q);
        return RationalPair(D - d_ * N, D);
    }

    RationalPair delta1x_at(const SymPoint& P, const SymPoint& Q) const {
        return RationalPair(Q.x.num * P.y.num * P.x.den * Q.y.den -
                                P.x.num * Q.y.num * Q.x.den * P.y.den,
                            dens(P, Q));
    }

    RationalPair delta1y_at(const SymPoint& P, const SymPoint& Q) const {
        return RationalPair(P.x.num * Q.x.num * P.y.den * Q.y.den +
                                P.y.num * Q.y.num * P.x.den * Q.x.den,
                            dens(P, Q));
    }

    // z1 (+)_0 z2 componentwise over the cleared common denominator
    SymPoint add0(const SymPoint& P, const SymPoint& Q) const {
        MPoly D = dens(P, Q), N = nums(P, Q);
        MPoly nx = P.x.num * Q.x.num * P.y.den * Q.y.den -
                   c_ * P.y.num * Q.y.num * P.x.den * Q.x.den;
        MPoly ny = P.x.num * Q.y.num * P.y.den * Q.x.den +
                   P.y.num * Q.x.num * P.x.den * Q.y.den;
        return {RationalPair(nx, D - d_ * N), RationalPair(ny, D + d_ * N)};
    }

    // z1 (+)_1 z2, the displayed form (nu_1x/delta_1x, nu_1y/delta_1y)
    SymPoint add1(const SymPoint& P, const SymPoint& Q) const {
        require_rescaled("add1");
        MPoly a = P.x.num * P.y.num * Q.x.den * Q.y.den;
        MPoly b = Q.x.num * Q.y.num * P.x.den * P.y.den;
        MPoly d1x = Q.x.num * P.y.num * P.x.den * Q.y.den -
                    P.x.num * Q.y.num * Q.x.den * P.y.den;
        MPoly d1y = P.x.num * Q.x.num * P.y.den * Q.y.den +
                    P.y.num * Q.y.num * P.x.den * Q.x.den;
        return {RationalPair(a - b, d1x), RationalPair(a + b, d1y)};
    }

    SymPoint add(AddLaw law, const SymPoint& P, const SymPoint& Q) const {
        return law == AddLaw::plus0 ? add0(P, Q) : add1(P, Q);
    }

    SymPoint iota(const SymPoint& P) const {
        return {P.x, RationalPair(MPoly::constant(ctx_, -1) * P.y.num, P.y.den)};
    }

    SymPoint rho(const SymPoint& P) const {
        return {RationalPair(MPoly::constant(ctx_, -1) * P.y.num, P.y.den), P.x};
    }

    SymPoint tau(const SymPoint& P) const {
        require_rescaled("tau");
        return {RationalPair(P.x.den, t_ * P.x.num), RationalPair(P.y.den, t_ * P.y.num)};
    }

    // displayed addition at slot points, componentwise
    std::pair<RationalPair, RationalPair> build_add(AddLaw law, int i, int j) const {
        SymPoint s = add(law, point(i), point(j));
        return {s.x, s.y};
    }

    DeltaRecord build_deltas() const {
        if (slot_count() < 2)
            throw BadSlot("build_deltas needs at least two point slots");
        int i = labels_[0], j = labels_[1];
        SymPoint P = point(i), Q = point(j);
        DeltaRecord r{delta_plus_at(P, Q).num,
                      delta_minus_at(P, Q).num,
                      MPoly::zero(ctx_),
                      delta1x_at(P, Q).num,
                      delta1y_at(P, Q).num,
                      MPoly::zero(ctx_),
                      std::nullopt,
                      std::nullopt};
        r.delta = r.delta_plus * r.delta_minus;
        r.delta1 = r.delta1x * r.delta1y;
        if (slot_count() >= 3) {
            SymPoint R = point(labels_[2]);
            SymPoint L12 = add0(P, Q), R23 = add0(Q, R);
            r.Dx = add0(L12, R).x.den * add0(P, R23).x.den;
            r.Dy = add0(L12, R).y.den * add0(P, R23).y.den;
        }
        return r;
    }

private:
    SymbolicCurve(CurveForm form, std::vector<int> labels, std::vector<std::string> names)
        : form_(form),
          labels_(std::move(labels)),
          ctx_(VarContext::make(names)),
          c_(form == CurveForm::general ? MPoly::var(ctx_, "c") : MPoly::constant(ctx_, 1)),
          d_(form == CurveForm::general ? MPoly::var(ctx_, "d")
                                        : MPoly::var(ctx_, "t") * MPoly::var(ctx_, "t")),
          t_(form == CurveForm::rescaled ? MPoly::var(ctx_, "t") : MPoly::zero(ctx_)) {}

    static std::vector<int> standard_labels(int n) {
        if (n < 1) throw BadSlot("need at least one point slot");
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i + 1;
        return v;
    }

    // x1,(x2,) y1,(y2,) then x3,y3,... then the parameters
    static std::vector<std::string> standard_names(int n, std::vector<std::string> params) {
        std::vector<std::string> v;
        for (int i = 1; i <= std::min(n, 2); ++i) v.push_back("x" + std::to_string(i));
        for (int i = 1; i <= std::min(n, 2); ++i) v.push_back("y" + std::to_string(i));
        for (int i = 3; i <= n; ++i) {
            v.push_back("x" + std::to_string(i));
            v.push_back("y" + std::to_string(i));
        }
        for (auto& p : params) v.push_back(std::move(p));
        return v;
    }

    int check(int slot) const {
        for (int l : labels_)
            if (l == slot) return slot;
        throw BadSlot("no point slot " + std::to_string(slot));
    }

    void require_rescaled(const char* what) const {
        if (form_ != CurveForm::rescaled)
            throw ModeMismatch(std::string(what) + " requires the rescaled curve");
    }

    static MPoly dens(const SymPoint& P, const SymPoint& Q) {
        return P.x.den * P.y.den * Q.x.den * Q.y.den;
    }

    static MPoly nums(const SymPoint& P, const SymPoint& Q) {
        return P.x.num * P.y.num * Q.x.num * Q.y.num;
    }

    CurveForm form_;
    std::vector<int> labels_;
    Ctx ctx_;
    MPoly c_, d_, t_;
};

}
