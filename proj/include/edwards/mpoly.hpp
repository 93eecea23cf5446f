#pragma once

#include "edwards/errors.hpp"
#include "edwards/ffield.hpp"
#include "edwards/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace edwards {

// Ordered list of distinct variable names. The sequence fixes the lex
// priority: earlier names compare higher.
class VarContext {
public:
    explicit VarContext(std::vector<std::string> names) : names_(std::move(names)) {
        for (size_t i = 0; i < names_.size(); ++i) {
            if (!index_.emplace(names_[i], i).second)
                throw EdwardsError("duplicate variable name: " + names_[i]);
        }
    }

    static std::shared_ptr<const VarContext> make(std::vector<std::string> names) {
        return std::make_shared<const VarContext>(std::move(names));
    }

    size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(size_t i) const { return names_[i]; }

    int index_of(const std::string& n) const {
        auto it = index_.find(n);
        return it == index_.end() ? -1 : static_cast<int>(it->second);
    }

    bool has(const std::string& n) const { return index_.count(n) != 0; }

    friend bool operator==(const VarContext& a, const VarContext& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, size_t> index_;
};

using Ctx = std::shared_ptr<const VarContext>;

inline bool same_context(const Ctx& a, const Ctx& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_context(const Ctx& a, const Ctx& b, const char* where) {
    if (!same_context(a, b))
        throw ContextMismatch(std::string(where) + ": operands use different variable contexts");
}

// Exponent vector; one entry per context variable.
using Exp = std::vector<uint32_t>;

inline uint64_t exp_total_degree(const Exp& e) {
    uint64_t s = 0;
    for (auto v : e) s += v;
    return s;
}

inline Exp exp_mul(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool exp_divides(const Exp& a, const Exp& b) { // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exp exp_quot(const Exp& b, const Exp& a) { // b / a
    Exp r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline Exp exp_lcm(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

enum class OrderKind { lex, grevlex };

inline const char* order_name(OrderKind k) {
    return k == OrderKind::lex ? "lex" : "grevlex";
}

inline OrderKind order_from_name(const std::string& s) {
    if (s == "lex") return OrderKind::lex;
    if (s == "grevlex") return OrderKind::grevlex;
    throw EdwardsError("unknown monomial order: " + s);
}

struct MonomialOrder {
    OrderKind kind = OrderKind::lex;

    // strict a < b
    bool less(const Exp& a, const Exp& b) const {
        if (kind == OrderKind::lex) {
            for (size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return a[i] < b[i];
            }
            return false;
        }
        uint64_t da = exp_total_degree(a), db = exp_total_degree(b);
        if (da != db) return da < db;
        // graded reverse lex: with equal degree, a < b iff the last nonzero
        // entry of a-b is positive
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }
};

class MPoly {
public:
    explicit MPoly(Ctx ctx) : ctx_(std::move(ctx)) {
        if (!ctx_) throw EdwardsError("MPoly requires a variable context");
    }

    static MPoly zero(const Ctx& ctx) { return MPoly(ctx); }

    static MPoly constant(const Ctx& ctx, Rat c) {
        MPoly p(ctx);
        if (c != 0) p.terms_.emplace(Exp(ctx->size(), 0), std::move(c));
        return p;
    }

    static MPoly var(const Ctx& ctx, const std::string& name, uint32_t power = 1) {
        int i = ctx->index_of(name);
        if (i < 0) throw UnknownVariable("no variable '" + name + "' in context");
        MPoly p(ctx);
        Exp e(ctx->size(), 0);
        e[static_cast<size_t>(i)] = power;
        p.terms_.emplace(std::move(e), Rat(1));
        return p;
    }

    static MPoly term(const Ctx& ctx, Exp e, Rat c) {
        MPoly p(ctx);
        if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }

    const Ctx& ctx() const { return ctx_; }
    const std::map<Exp, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    uint64_t total_degree() const {
        uint64_t d = 0;
        for (auto& [e, c] : terms_) d = std::max(d, exp_total_degree(e));
        return d;
    }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && exp_total_degree(terms_.begin()->first) == 0);
    }

    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        return terms_.begin()->second;
    }

    const Exp& leading_exp(const MonomialOrder& ord) const {
        if (terms_.empty()) throw EdwardsError("leading term of zero polynomial");
        // the map's key order (vector lexicographic) is exactly lex
        if (ord.kind == OrderKind::lex) return std::prev(terms_.end())->first;
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (ord.less(best->first, it->first)) best = it;
        return best->first;
    }

    const Rat& leading_coeff(const MonomialOrder& ord) const {
        return terms_.at(leading_exp(ord));
    }

    MPoly operator-() const {
        MPoly r(ctx_);
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    MPoly& operator+=(const MPoly& b) {
        require_same_context(ctx_, b.ctx_, "poly add");
        for (auto& [e, c] : b.terms_) add_term(e, c);
        return *this;
    }

    MPoly& operator-=(const MPoly& b) {
        require_same_context(ctx_, b.ctx_, "poly sub");
        for (auto& [e, c] : b.terms_) add_term(e, -c);
        return *this;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        r += b;
        return r;
    }

    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        r -= b;
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        require_same_context(a.ctx_, b.ctx_, "poly mul");
        MPoly r(a.ctx_);
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_)
                r.add_term(exp_mul(ea, eb), ca * cb);
        return r;
    }

    friend MPoly operator*(const MPoly& a, const Rat& s) {
        MPoly r(a.ctx_);
        if (s == 0) return r;
        for (auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
        return r;
    }
    friend MPoly operator*(const Rat& s, const MPoly& a) { return a * s; }

    MPoly pow(uint32_t n) const {
        MPoly r = constant(ctx_, 1);
        MPoly b = *this;
        while (n) {
            if (n & 1) r = r * b;
            b = b * b;
            n >>= 1;
        }
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    void add_term(const Exp& e, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Simultaneous substitution. Variables without an explicit image must
    // exist (same name) in the image context. The result lives in the image
    // context, so this also performs renaming and context extension.
    MPoly substitute(const std::map<std::string, MPoly>& images) const {
        Ctx out;
        for (auto& [n, p] : images) {
            if (!out) out = p.ctx();
            else require_same_context(out, p.ctx(), "substitute images");
        }
        if (!out) out = ctx_;

        std::vector<MPoly> image_of;
        image_of.reserve(ctx_->size());
        for (size_t i = 0; i < ctx_->size(); ++i) {
            const std::string& n = ctx_->name(i);
            auto it = images.find(n);
            if (it != images.end()) {
                image_of.push_back(it->second);
            } else if (out->has(n)) {
                image_of.push_back(var(out, n));
            } else {
                image_of.push_back(zero(out)); // placeholder, flagged on use
            }
        }

        MPoly result = zero(out);
        // lazily grown power cache per variable
        std::vector<std::vector<MPoly>> powers(ctx_->size());
        for (auto& [e, c] : terms_) {
            MPoly t = constant(out, c);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                const std::string& n = ctx_->name(i);
                if (!images.count(n) && !out->has(n))
                    throw UnknownVariable("substitute: no image for variable '" + n + "'");
                auto& cache = powers[i];
                if (cache.empty()) cache.push_back(constant(out, 1));
                while (cache.size() <= e[i])
                    cache.push_back(cache.back() * image_of[i]);
                t = t * cache[e[i]];
            }
            result = result + t;
        }
        return result;
    }

    // Evaluation homomorphism into F_p. Every context variable needs a value.
    FieldElement evaluate(const std::map<std::string, FieldElement>& assignment) const {
        if (assignment.empty()) throw MissingAssignment("evaluate: empty assignment");
        const Int& p = assignment.begin()->second.modulus();
        std::vector<FieldElement> val;
        val.reserve(ctx_->size());
        for (size_t i = 0; i < ctx_->size(); ++i) {
            auto it = assignment.find(ctx_->name(i));
            if (it == assignment.end())
                throw MissingAssignment("evaluate: variable '" + ctx_->name(i) +
                                        "' has no assigned value");
            val.push_back(it->second);
        }
        FieldElement acc(0, p);
        for (auto& [e, c] : terms_) {
            FieldElement num(rat_num(c), p), den(rat_den(c), p);
            if (den.is_zero())
                throw DivisionByZero("evaluate: coefficient denominator vanishes mod p");
            FieldElement t = num / den;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i]) t = t * val[i].pow(e[i]);
            acc = acc + t;
        }
        return acc;
    }

    // Canonical text form: terms sorted descending by the given order.
    std::string format(const MonomialOrder& ord = MonomialOrder{}) const {
        if (terms_.empty()) return "0";
        std::vector<const Exp*> exps;
        exps.reserve(terms_.size());
        for (auto& [e, c] : terms_) exps.push_back(&e);
        std::sort(exps.begin(), exps.end(),
                  [&](const Exp* a, const Exp* b) { return ord.less(*b, *a); });
        std::string out;
        bool first = true;
        for (const Exp* pe : exps) {
            const Rat& c = terms_.at(*pe);
            bool neg = c < 0;
            Rat mag = neg ? Rat(-c) : c;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            std::string mono = format_monomial(*pe);
            if (mono.empty()) {
                out += rat_str(mag);
            } else {
                if (mag != 1) out += rat_str(mag) + "*";
                out += mono;
            }
        }
        return out;
    }

    static MPoly parse(const Ctx& ctx, const std::string& text);

private:
    std::string format_monomial(const Exp& e) const {
        std::string s;
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += "*";
            s += ctx_->name(i);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s;
    }

    Ctx ctx_;
    std::map<Exp, Rat> terms_;
};

namespace detail {

class PolyParser {
public:
    PolyParser(const Ctx& ctx, const std::string& s) : ctx_(ctx), s_(s) {}

    MPoly run() {
        MPoly r = expression();
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError("unexpected trailing input at offset " + std::to_string(pos_));
        return r;
    }

private:
    MPoly expression() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        MPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                get();
                MPoly t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    MPoly term() {
        MPoly acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                get();
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    MPoly factor() {
        MPoly base = primary();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            std::string digits = read_digits();
            if (digits.empty()) throw ParseError("exponent expected after '^'");
            return base.pow(static_cast<uint32_t>(std::stoul(digits)));
        }
        return base;
    }

    MPoly primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            MPoly r = expression();
            skip_ws();
            if (get() != ')') throw ParseError("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num(read_digits());
            skip_ws();
            if (peek() == '/') {
                get();
                skip_ws();
                std::string d = read_digits();
                if (d.empty()) throw ParseError("denominator expected after '/'");
                return MPoly::constant(ctx_, Rat(num, Int(d)));
            }
            return MPoly::constant(ctx_, Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            if (!ctx_->has(name)) throw UnknownVariable("parse: unknown variable '" + name + "'");
            return MPoly::var(ctx_, name);
        }
        throw ParseError(std::string("unexpected character '") + c + "' at offset " +
                         std::to_string(pos_));
    }

    std::string read_digits() {
        std::string d;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            d += s_[pos_++];
        return d;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

    Ctx ctx_;
    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace detail

inline MPoly MPoly::parse(const Ctx& ctx, const std::string& text) {
    return detail::PolyParser(ctx, text).run();
}

} // namespace edwards
