#pragma once

#include "edwards/division.hpp"
#include "edwards/mpoly.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace edwards {

// Gröbner basis with cofactor tracking: basis[i] == sum_j repr[i][j] * gens[j]
// holds exactly for the input generators, so reductions against the basis can
// be rewritten as certificates over the original generating set.
struct ExtendedGB {
    std::vector<MPoly> basis;
    std::vector<std::vector<MPoly>> repr;
};

namespace detail {

// Append-only record of every polynomial produced during the run. Each entry
// states how it combines earlier entries, so representations over the input
// generators can be expanded after the fact, and only for entries the final
// basis actually depends on. S-polynomials that reduce to zero never enter
// the history, which is where naive eager tracking wastes most of its time.
struct GBNode {
    MPoly p;
    std::vector<std::pair<size_t, MPoly>> parents; // p == sum coeff * hist[idx].p
};

struct GBRun {
    std::vector<GBNode> hist;
    std::vector<size_t> work; // indices of the reduced basis, sorted by LM
};

// Buchberger with normal pair selection and the two standard criteria,
// followed by minimalization and tail inter-reduction, so `work` names the
// unique reduced basis (monic, ascending leading monomials).
inline GBRun run_buchberger(const std::vector<MPoly>& gens, const MonomialOrder& ord) {
    if (gens.empty()) throw EdwardsError("groebner: no generators");
    const Ctx& ctx = gens.front().ctx();
    for (auto& g : gens) {
        require_same_context(ctx, g.ctx(), "groebner");
        if (g.is_zero()) throw EdwardsError("groebner: zero generator");
    }

    GBRun run;
    std::vector<GBNode>& hist = run.hist;
    std::vector<size_t>& work = run.work;
    for (const MPoly& g : gens) {
        work.push_back(hist.size());
        hist.push_back({g, {}});
    }

    auto poly = [&](size_t wi) -> const MPoly& { return hist[work[wi]].p; };
    auto lm = [&](size_t wi) { return poly(wi).leading_exp(ord); };

    auto reduce_work = [&](const MPoly& target, const std::vector<size_t>& wset) {
        std::vector<const MPoly*> divisors;
        divisors.reserve(wset.size());
        for (size_t wi : wset) divisors.push_back(&hist[wi].p);
        return reduce_by(target, divisors, ord);
    };

    using Pair = std::pair<size_t, size_t>;
    std::set<Pair> pending, handled;
    for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = i + 1; j < work.size(); ++j) pending.insert({i, j});

    while (!pending.empty()) {
        // normal selection: treat the pair with the smallest lcm first
        auto best = pending.begin();
        Exp best_lcm = exp_lcm(lm(best->first), lm(best->second));
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Exp l = exp_lcm(lm(it->first), lm(it->second));
            if (ord.less(l, best_lcm)) {
                best = it;
                best_lcm = l;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);
        handled.insert({i, j});

        const Exp li = lm(i), lj = lm(j);
        const Exp l = exp_lcm(li, lj);

        // Buchberger's first criterion: coprime leading monomials
        if (l == exp_mul(li, lj)) continue;

        // Buchberger's second (chain) criterion
        bool chained = false;
        for (size_t k = 0; k < work.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!exp_divides(lm(k), l)) continue;
            Pair ik{std::min(i, k), std::max(i, k)};
            Pair jk{std::min(j, k), std::max(j, k)};
            if (handled.count(ik) && handled.count(jk)) chained = true;
        }
        if (chained) continue;

        // S-polynomial, then reduce by the working set
        const Rat ci = poly(i).leading_coeff(ord), cj = poly(j).leading_coeff(ord);
        MPoly mi = MPoly::term(ctx, exp_quot(l, li), Rat(1) / ci);
        MPoly mj = MPoly::term(ctx, exp_quot(l, lj), Rat(1) / cj);
        MPoly s = mi * poly(i) - mj * poly(j);
        if (s.is_zero()) continue;
        DivisionResult dr = reduce_work(s, work);
        if (dr.remainder.is_zero()) continue;

        // remainder == mi*W[i] - mj*W[j] - sum cof[k]*W[k]
        std::map<size_t, MPoly> par;
        auto add_par = [&](size_t h, const MPoly& c) {
            auto [it, fresh] = par.emplace(h, c);
            if (!fresh) it->second += c;
        };
        add_par(work[i], mi);
        add_par(work[j], -mj);
        for (size_t k = 0; k < work.size(); ++k)
            if (!dr.cofactors[k].is_zero()) add_par(work[k], -dr.cofactors[k]);

        GBNode node{std::move(dr.remainder), {}};
        for (auto& [h, c] : par)
            if (!c.is_zero()) node.parents.emplace_back(h, std::move(c));

        const size_t n = work.size();
        work.push_back(hist.size());
        hist.push_back(std::move(node));
        for (size_t k = 0; k < n; ++k) pending.insert({k, n});
    }

    // minimalize: drop every element whose leading monomial is divisible by
    // another kept element's. Sorting ascending first means potential divisors
    // are always already kept (a | b implies a <= b in any monomial order).
    std::sort(work.begin(), work.end(), [&](size_t a, size_t b) {
        return ord.less(hist[a].p.leading_exp(ord), hist[b].p.leading_exp(ord));
    });
    {
        std::vector<size_t> kept;
        for (size_t h : work) {
            const Exp& e = hist[h].p.leading_exp(ord);
            bool redundant = false;
            for (size_t k : kept)
                if (exp_divides(hist[k].p.leading_exp(ord), e)) {
                    redundant = true;
                    break;
                }
            if (!redundant) kept.push_back(h);
        }
        work = std::move(kept);
    }

    // inter-reduce to the unique reduced basis. On a minimal set only tails
    // change and leading monomials survive, so this settles in one sweep; the
    // outer loop re-checks to keep the fixed point explicit.
    bool changed = work.size() > 1;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < work.size(); ++i) {
            std::vector<size_t> others;
            others.reserve(work.size() - 1);
            for (size_t k = 0; k < work.size(); ++k)
                if (k != i) others.push_back(work[k]);
            DivisionResult dr = reduce_work(poly(i), others);
            if (dr.remainder == poly(i)) continue;
            changed = true;
            if (dr.remainder.is_zero()) {
                work.erase(work.begin() + static_cast<long>(i));
                --i;
                continue;
            }
            GBNode node{std::move(dr.remainder), {{work[i], MPoly::constant(ctx, 1)}}};
            for (size_t k = 0; k < others.size(); ++k)
                if (!dr.cofactors[k].is_zero())
                    node.parents.emplace_back(others[k], -dr.cofactors[k]);
            work[i] = hist.size();
            hist.push_back(std::move(node));
        }
    }

    // monic normalization via fresh nodes (in-place scaling would corrupt
    // parent references recorded against the unscaled polynomial)
    for (size_t i = 0; i < work.size(); ++i) {
        Rat c = poly(i).leading_coeff(ord);
        if (c == 1) continue;
        GBNode node{poly(i) * (Rat(1) / c), {{work[i], MPoly::constant(ctx, Rat(1) / c)}}};
        work[i] = hist.size();
        hist.push_back(std::move(node));
    }

    std::sort(work.begin(), work.end(), [&](size_t a, size_t b) {
        return ord.less(hist[a].p.leading_exp(ord), hist[b].p.leading_exp(ord));
    });
    return run;
}

} // namespace detail

// Reduced Gröbner basis only; skips representation expansion, which can cost
// far more than the basis itself when reduction chains run deep.
inline std::vector<MPoly> groebner(const std::vector<MPoly>& gens, const MonomialOrder& ord) {
    detail::GBRun run = detail::run_buchberger(gens, ord);
    std::vector<MPoly> basis;
    basis.reserve(run.work.size());
    for (size_t h : run.work) basis.push_back(std::move(run.hist[h].p));
    return basis;
}

inline ExtendedGB groebner_extended(const std::vector<MPoly>& gens, const MonomialOrder& ord) {
    detail::GBRun run = detail::run_buchberger(gens, ord);
    const Ctx& ctx = gens.front().ctx();

    // expand representations over the generators, memoized, only as needed
    std::vector<std::optional<std::vector<MPoly>>> rep(run.hist.size());
    auto expand = [&](auto&& self, size_t h) -> const std::vector<MPoly>& {
        if (rep[h]) return *rep[h];
        std::vector<MPoly> r(gens.size(), MPoly::zero(ctx));
        if (h < gens.size()) {
            r[h] = MPoly::constant(ctx, 1);
        } else {
            for (auto& [ph, c] : run.hist[h].parents) {
                const std::vector<MPoly>& sub = self(self, ph);
                for (size_t j = 0; j < gens.size(); ++j)
                    if (!sub[j].is_zero()) r[j] += c * sub[j];
            }
        }
        rep[h] = std::move(r);
        return *rep[h];
    };

    ExtendedGB out;
    for (size_t h : run.work) {
        out.basis.push_back(run.hist[h].p);
        out.repr.push_back(expand(expand, h));
    }
    return out;
}

} // namespace edwards
