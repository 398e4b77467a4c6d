#include <doctest.h>

#include "qleaf/cyclotomic.hpp"
#include "support.hpp"

using namespace qleaf;

namespace {
Cyc zeta(Int n, Int k = 1) { return Cyc::root_of_unity(n, k); }
}

TEST_CASE("roots of unity satisfy their defining relations") {
    // zeta_2 = -1 reduces all the way to a rational.
    CHECK(zeta(2).is_rational());
    CHECK(zeta(2).to_rational() == Rat(-1));
    // zeta_3^3 = 1 and 1 + zeta_3 + zeta_3^2 = 0.
    CHECK(zeta(3) * zeta(3) * zeta(3) == Cyc(1));
    CHECK(Cyc(1) + zeta(3) + zeta(3, 2) == Cyc(0));
    // Full vanishing sum at a prime order.
    Cyc s(0);
    for (Int k = 0; k < 5; ++k) s += zeta(5, k);
    CHECK(s.is_zero());
    // zeta_4^2 = -1.
    CHECK(zeta(4) * zeta(4) == Cyc(-1));
}

TEST_CASE("equality is well defined across orders") {
    // zeta_6^2 equals zeta_3 even though they reduce at different orders.
    CHECK(zeta(6, 2) == zeta(3));
    CHECK(zeta(6, 3) == Cyc(-1));
    CHECK(zeta(12, 4) == zeta(3));
    CHECK(zeta(8, 2) == zeta(4));
    CHECK(zeta(6) != zeta(3));
}

TEST_CASE("rational demotion") {
    Cyc sqrt2 = zeta(8) + zeta(8, 7);
    CHECK_FALSE(sqrt2.is_rational());
    CHECK(sqrt2 * sqrt2 == Cyc(2));
    CHECK((sqrt2 * sqrt2).is_rational());
    CHECK_THROWS_AS(sqrt2.to_rational(), input_error);
    // Golden-ratio pair: A + A* = 1, A * A* = -1.
    Cyc a = -(zeta(5, 2) + zeta(5, 3));
    Cyc as = -(zeta(5, 1) + zeta(5, 4));
    CHECK(a + as == Cyc(1));
    CHECK(a * as == Cyc(-1));
}

TEST_CASE("printing and parsing round-trip") {
    CHECK(Cyc(Rat(3, 2)).str() == "3/2");
    Cyc w = zeta(3);
    CHECK(w.str() == "[0,1]@3");
    CHECK(Cyc::parse("[0,1]@3") == w);
    CHECK(Cyc::parse("-5/2") == Cyc(Rat(-5, 2)));
    CHECK(Cyc::parse("[1,1/2,0,-2]@5") ==
          Cyc(1) + zeta(5) * Rat(1, 2) - zeta(5, 3) * Rat(2));
    CHECK_THROWS_AS(Cyc::parse("[1,2@3"), input_error);
    CHECK_THROWS_AS(Cyc::parse("[1]@0"), input_error);
    for (int i = 0; i < 50; ++i) {
        Int n = testing::rand_int(1, 12);
        std::vector<Rat> coeffs;
        for (Int k = 0; k < n; ++k) coeffs.push_back(testing::rand_rat());
        Cyc v = Cyc::from_coeffs(n, coeffs);
        CHECK(Cyc::parse(v.str()) == v);
    }
}

TEST_CASE("ring axioms on random values of mixed order") {
    auto random_cyc = [] {
        Int n = testing::rand_int(1, 10);
        std::vector<Rat> coeffs;
        for (Int k = 0; k < n; ++k) coeffs.push_back(testing::rand_rat(4, 3));
        return Cyc::from_coeffs(n, coeffs);
    };
    for (int i = 0; i < 120; ++i) {
        Cyc a = random_cyc(), b = random_cyc(), c = random_cyc();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Cyc(0));
    }
}

TEST_CASE("galois-style sanity: norm of 1 + zeta_5") {
    // Product of 1 + zeta_5^k over k = 1..4 equals Phi_5(-1) = 1.
    Cyc prod(1);
    for (Int k = 1; k < 5; ++k) prod *= Cyc(1) + zeta(5, k);
    CHECK(prod == Cyc(1));
}
