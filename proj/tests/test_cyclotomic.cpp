#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "orbifrob/cyclotomic.hpp"

using namespace orbifrob;

namespace {

// deterministic random cyclotomic with small coefficients
Cyclotomic random_cyc(std::mt19937& rng, long order) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    Cyclotomic acc = Cyclotomic::zero(order);
    for (long k = 0; k < order; ++k) {
        int a = num(rng);
        if (a == 0) continue;
        acc += Cyclotomic::from_rat(rat(a, den(rng)), order) * Cyclotomic::root(order, k);
    }
    return acc;
}

}  // namespace

TEST_CASE("roots of unity basics") {
    CHECK(Cyclotomic::root(4, 1) * Cyclotomic::root(4, 1) == Cyclotomic::from_rat(rat(-1)));
    CHECK(Cyclotomic::root(3, 1).pow(3).is_one());
    CHECK(Cyclotomic::root(12, 7) == Cyclotomic::root_frac(rat(7, 12)));
    // zeta_6 = -zeta_3^2
    CHECK(Cyclotomic::root(6, 1) == -Cyclotomic::root(3, 2));
}

TEST_CASE("canonical zero and one") {
    CHECK(Cyclotomic::zero(8).is_zero());
    CHECK(Cyclotomic::one(8).is_one());
    CHECK(Cyclotomic::one(8) == Cyclotomic::one(12));
    CHECK(Cyclotomic::root(5, 0).is_one());
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(20260810);
    for (long order : {4L, 6L, 12L}) {
        for (int trial = 0; trial < 20; ++trial) {
            Cyclotomic a = random_cyc(rng, order);
            Cyclotomic b = random_cyc(rng, order);
            Cyclotomic c = random_cyc(rng, order);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK((a * a.inverse()).is_one());
            }
        }
    }
}

TEST_CASE("conjugation is an involution and fixes rationals") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Cyclotomic a = random_cyc(rng, 12);
        CHECK(a.conj().conj() == a);
    }
    CHECK(Cyclotomic::from_rat(rat(3, 7), 5).conj() == Cyclotomic::from_rat(rat(3, 7), 5));
    CHECK(Cyclotomic::root(8, 1).conj() == Cyclotomic::root(8, 7));
}

TEST_CASE("promotion is a field embedding") {
    Cyclotomic z3 = Cyclotomic::root(3, 1);
    Cyclotomic z12 = z3.promoted(12);
    CHECK(z12.pow(3).is_one());
    CHECK(z12 == Cyclotomic::root(12, 4));
    // mixed-order arithmetic promotes to lcm
    Cyclotomic z4 = Cyclotomic::root(4, 1);
    CHECK((z3 * z4).order() == 12);
    CHECK(z3 * z4 == Cyclotomic::root(12, 7));
}

TEST_CASE("root-of-unity detection") {
    CHECK(*Cyclotomic::root(12, 5).as_root_of_unity() == rat(5, 12));
    CHECK(*(-Cyclotomic::root(3, 1)).as_root_of_unity() == rat(5, 6));
    CHECK(!Cyclotomic::from_rat(rat(2)).as_root_of_unity().has_value());
    Cyclotomic mix = Cyclotomic::root(5, 1) + Cyclotomic::one(5);
    CHECK(!mix.as_root_of_unity().has_value());
}

TEST_CASE("sqrt_unit principal branch") {
    // identity case
    CHECK(sqrt_unit(Cyclotomic::one()).is_one());
    // zeta_4 -> zeta_8
    CHECK(sqrt_unit(Cyclotomic::root(4, 1)) == Cyclotomic::root(8, 1));
    // derived check by squaring for zeta_3
    Cyclotomic r = sqrt_unit(Cyclotomic::root(3, 1));
    CHECK(r * r == Cyclotomic::root(3, 1));
    // branch arguments lie in [0, pi): argument fraction < 1/2
    for (long m : {3L, 5L, 8L, 12L}) {
        for (long k = 0; k < m; ++k) {
            Cyclotomic c = Cyclotomic::root(m, k);
            if (c == Cyclotomic::from_rat(rat(-1))) continue;
            Cyclotomic s = sqrt_unit(c);
            CHECK(s * s == c);
            auto a = s.as_root_of_unity();
            REQUIRE(a.has_value());
            CHECK(*a < rat(1, 2));
        }
    }
    CHECK_THROWS_AS(sqrt_unit(Cyclotomic::from_rat(rat(-1))), BranchAmbiguity);
    CHECK_THROWS_AS(sqrt_unit(Cyclotomic::from_rat(rat(2))), NotRootOfUnity);
    CHECK(sqrt_unit_pair_first(Cyclotomic::from_rat(rat(-1))) == Cyclotomic::root(4, 1));
}

TEST_CASE("galois automorphisms") {
    Cyclotomic a = Cyclotomic::root(7, 1) + Cyclotomic::root(7, 3);
    Cyclotomic b = a.galois(2);
    CHECK(b == Cyclotomic::root(7, 2) + Cyclotomic::root(7, 6));
    // multiplicativity of the automorphism
    Cyclotomic c = Cyclotomic::root(7, 5);
    CHECK((a * c).galois(2) == a.galois(2) * c.galois(2));
}
