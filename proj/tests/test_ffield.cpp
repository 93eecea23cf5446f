#include "edwards/ffield.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace edwards;

TEST_CASE("primality check") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(10007));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(10005));
    CHECK_THROWS_AS(PrimeField(15), EdwardsError);
    CHECK_THROWS_AS(PrimeField(2), EdwardsError);  // characteristic 2 rejected
    CHECK_NOTHROW(PrimeField(3));
}

TEST_CASE("basic arithmetic") {
    PrimeField F5(5);
    CHECK(F5.elem(3) * F5.elem(4) == F5.elem(2));  // 12 mod 5

    PrimeField F13(13);
    CHECK(F13.one() / F13.elem(2) == F13.elem(7)); // 2*7 = 14 = 1
    CHECK(F13.elem(-1) == F13.elem(12));
    CHECK(F13.elem(5) - F13.elem(9) == F13.elem(9));
    CHECK((-F13.elem(0)) == F13.elem(0));
}

TEST_CASE("mixed fields rejected") {
    PrimeField F5(5), F7(7);
    CHECK_THROWS_AS(F5.elem(1) + F7.elem(1), MixedFields);
    CHECK_THROWS_AS(F5.elem(1) * F7.elem(1), MixedFields);
}

TEST_CASE("division by zero is an error") {
    PrimeField F13(13);
    CHECK_THROWS_AS(F13.elem(3) / F13.zero(), DivisionByZero);
    CHECK_THROWS_AS(F13.zero().inv(), DivisionByZero);
}

TEST_CASE("multiplicative inverses, exhaustive over small fields") {
    for (int p : {3, 5, 13, 17, 29, 97, 101}) {
        PrimeField F(p);
        for (int a = 1; a < p; ++a) {
            CHECK(F.elem(a) * F.elem(a).inv() == F.one());
        }
    }
}

TEST_CASE("is_square agrees with exhaustive enumeration") {
    for (int p : {3, 5, 13, 17, 29, 41, 97, 101}) {
        PrimeField F(p);
        std::set<Int> squares;
        for (int b = 0; b < p; ++b) squares.insert((Int(b) * b) % p);
        for (int a = 0; a < p; ++a) {
            CAPTURE(p, a);
            CHECK(is_square(F.elem(a)) == (squares.count(a) == 1));
        }
    }
}

TEST_CASE("sqrt round-trips and picks the smaller root") {
    SECTION("pinned values in F_13") {
        PrimeField F13(13);
        CHECK(sqrt(F13.elem(4)) == F13.elem(2));  // roots 2 and 11
        CHECK(sqrt(F13.elem(3)) == F13.elem(4));  // roots 4 and 9
        CHECK(sqrt(F13.zero()) == F13.zero());
        CHECK_THROWS_AS(sqrt(F13.elem(2)), NotASquare);
    }
    SECTION("round trip over several fields, both residue classes mod 4") {
        for (int p : {13, 17, 29, 41, 97, 101, 10007}) {
            PrimeField F(p);
            for (int a = 0; a < std::min(p, 80); ++a) {
                FieldElement e = F.elem(a);
                if (!is_square(e)) continue;
                FieldElement r = sqrt(e);
                CHECK(r * r == e);
                CHECK(r.value() <= (Int(p) - r.value()) % p);
            }
        }
    }
}

TEST_CASE("pow handles negative exponents") {
    PrimeField F13(13);
    CHECK(F13.elem(2).pow(-1) == F13.elem(7));
    CHECK(F13.elem(2).pow(-2) == F13.elem(7) * F13.elem(7));
}
