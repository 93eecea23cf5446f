#pragma once

#include "edwards/mpoly.hpp"

#include <map>
#include <vector>

namespace edwards {

struct DivisionResult {
    std::vector<MPoly> cofactors;
    MPoly remainder;
};

namespace detail {

struct ExpOrdLess {
    MonomialOrder ord;
    bool operator()(const Exp& a, const Exp& b) const { return ord.less(a, b); }
};

// Division core. The working polynomial lives in a map keyed by the active
// monomial order, so the leading term is rbegin() and each reduction step
// costs O(|divisor| log |work|) instead of a full rebuild.
inline DivisionResult reduce_by(const MPoly& target, const std::vector<const MPoly*>& divisors,
                                const MonomialOrder& ord) {
    const Ctx& ctx = target.ctx();
    std::vector<Exp> lm;
    std::vector<Rat> lc;
    lm.reserve(divisors.size());
    lc.reserve(divisors.size());
    for (const MPoly* d : divisors) {
        require_same_context(ctx, d->ctx(), "reduce");
        if (d->is_zero()) throw DivisionByZero("reduce: zero divisor");
        lm.push_back(d->leading_exp(ord));
        lc.push_back(d->leading_coeff(ord));
    }

    std::map<Exp, Rat, ExpOrdLess> work{ExpOrdLess{ord}};
    for (auto& [e, c] : target.terms()) work.emplace(e, c);

    DivisionResult out{std::vector<MPoly>(divisors.size(), MPoly::zero(ctx)),
                       MPoly::zero(ctx)};
    while (!work.empty()) {
        auto lead = std::prev(work.end());
        bool divided = false;
        for (size_t i = 0; i < divisors.size(); ++i) {
            if (!exp_divides(lm[i], lead->first)) continue;
            const Exp qe = exp_quot(lead->first, lm[i]);
            const Rat qc = lead->second / lc[i];
            out.cofactors[i].add_term(qe, qc);
            // subtract qc*x^qe * divisor in place; the leading entry cancels
            // exactly, so the working leading monomial strictly decreases
            for (auto& [ge, gc] : divisors[i]->terms()) {
                auto [it, fresh] = work.emplace(exp_mul(qe, ge), Rat(0));
                it->second -= qc * gc;
                if (it->second == 0) work.erase(it);
            }
            divided = true;
            break;
        }
        if (!divided) {
            out.remainder.add_term(lead->first, lead->second);
            work.erase(lead);
        }
    }
    return out;
}

} // namespace detail

// Naive multivariate division with remainder. At each step the current
// leading term is divided by the FIRST divisor in sequence whose leading
// monomial divides it; otherwise the leading term moves to the remainder.
// Postcondition: target == sum(cofactors[i] * divisors[i]) + remainder, and
// no monomial of the remainder is divisible by any divisor leading monomial.
inline DivisionResult reduce(const MPoly& target, const std::vector<MPoly>& divisors,
                             const MonomialOrder& ord) {
    std::vector<const MPoly*> ptrs;
    ptrs.reserve(divisors.size());
    for (const MPoly& d : divisors) ptrs.push_back(&d);
    return detail::reduce_by(target, ptrs, ord);
}

} // namespace edwards
