#pragma once

#include "edwards/errors.hpp"
#include "edwards/rational.hpp"

#include <string>
#include <utility>

namespace edwards {

// Deterministic trial-division primality test; fine for desk-scale moduli.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

class PrimeField;

class FieldElement {
public:
    FieldElement() : v_(0), p_(0) {}
    FieldElement(Int v, Int p) : p_(std::move(p)) {
        v_ = v % p_;
        if (v_ < 0) v_ += p_;
    }

    const Int& value() const { return v_; }
    const Int& modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }

    FieldElement operator-() const { return FieldElement(p_ - v_, p_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check(b, "+");
        return FieldElement(a.v_ + b.v_, a.p_);
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check(b, "-");
        return FieldElement(a.v_ - b.v_ + a.p_, a.p_);
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check(b, "*");
        return FieldElement(a.v_ * b.v_, a.p_);
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        a.check(b, "/");
        return a * b.inv();
    }

    FieldElement pow(Int e) const {
        if (e < 0) return inv().pow(-e);
        return FieldElement(boost::multiprecision::powm(v_, e, p_), p_);
    }

    FieldElement inv() const {
        if (v_ == 0) throw DivisionByZero("inverse of 0 in F_" + p_.str());
        return pow(p_ - 2);
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) {
        return !(a == b);
    }
    friend bool operator<(const FieldElement& a, const FieldElement& b) {
        return a.v_ < b.v_; // representative order, used for canonical choices
    }

    std::string str() const { return v_.str(); }

private:
    void check(const FieldElement& o, const char* op) const {
        if (p_ != o.p_)
            throw MixedFields(std::string("operands of '") + op + "' live in F_" +
                              p_.str() + " and F_" + o.p_.str());
    }

    Int v_;
    Int p_;
};

class PrimeField {
public:
    explicit PrimeField(Int modulus) : p_(std::move(modulus)) {
        if (!is_prime(p_))
            throw EdwardsError("modulus " + p_.str() + " is not prime");
        if (p_ == 2)
            throw EdwardsError("characteristic 2 is not supported");
    }

    const Int& modulus() const { return p_; }

    FieldElement elem(Int v) const { return FieldElement(std::move(v), p_); }
    FieldElement zero() const { return elem(0); }
    FieldElement one() const { return elem(1); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) {
        return a.p_ == b.p_;
    }

private:
    Int p_;
};

// Euler criterion: a is a square iff a^((p-1)/2) is 0 or 1.
inline bool is_square(const FieldElement& a) {
    if (a.is_zero()) return true;
    return a.pow((a.modulus() - 1) / 2).value() == 1;
}

// Tonelli-Shanks square root. Of the two roots r and p-r, returns the one
// with the smaller canonical representative.
inline FieldElement sqrt(const FieldElement& a) {
    const Int& p = a.modulus();
    if (a.is_zero()) return a;
    if (!is_square(a)) throw NotASquare(a.str() + " is not a square in F_" + p.str());

    FieldElement r(0, p);
    if (p % 4 == 3) {
        r = a.pow((p + 1) / 4);
    } else {
        // write p-1 = q * 2^s with q odd
        Int q = p - 1;
        int s = 0;
        while (q % 2 == 0) { q /= 2; ++s; }
        // find a quadratic non-residue z
        FieldElement z(2, p);
        while (is_square(z)) z = z + FieldElement(1, p);
        int mi = s;
        FieldElement cc = z.pow(q);
        FieldElement t = a.pow(q);
        r = a.pow((q + 1) / 2);
        while (t.value() != 1) {
            // find least i with t^(2^i) = 1
            int i = 0;
            FieldElement t2 = t;
            while (t2.value() != 1) { t2 = t2 * t2; ++i; }
            FieldElement b = cc;
            for (int j = 0; j < mi - i - 1; ++j) b = b * b;
            mi = i;
            cc = b * b;
            t = t * cc;
            r = r * b;
        }
    }
    FieldElement other = -r;
    return (other.value() < r.value()) ? other : r;
}

} // namespace edwards
