#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gshds/cyclotomic.hpp"
#include "gshds/pgroup.hpp"

using namespace gshds;

TEST_CASE("eta^2 reduces to -1 - eta at level 3") {
    Cyclotomic e2 = Cyclotomic::root_power(3, 1, 2);
    CHECK(e2.coeffs() == std::vector<long long>{-1, -1});
}

TEST_CASE("omega at p = 3 is a root of x^2 + x + 1") {
    Cyclotomic w = omega_qr(3, 1);
    CHECK(w == Cyclotomic::root_power(3, 1, 1));
    Cyclotomic zero = w * w + w + Cyclotomic::integer(3, 1, 1);
    CHECK(zero.is_zero());
}

TEST_CASE("omega identities: sum -1, product (1 - (-1|p) p)/4") {
    for (long p : {3L, 5L, 7L, 11L}) {
        Cyclotomic w = omega_qr(p, 1), wn = omega_qnr(p, 1);
        CHECK((w + wn + Cyclotomic::integer(p, 1, 1)).is_zero());
        Cyclotomic prod = w * wn;
        REQUIRE(prod.is_integer());
        CHECK(prod.integer_value() == (1 - legendre(-1, p) * p) / 4);
    }
    // p = 5 spot value: omega * omega^(n0) = -1
    Cyclotomic prod = omega_qr(5, 1) * omega_qnr(5, 1);
    CHECK(prod.integer_value() == -1);
}

TEST_CASE("gauss sum squares to (-1|p) p at every level") {
    for (auto [p, s] : {std::pair<long, int>{3, 1}, {3, 2}, {3, 3}, {5, 1},
                        {5, 2}, {7, 1}}) {
        Cyclotomic g = gauss_sum(p, s);
        Cyclotomic sq = g * g;
        REQUIRE(sq.is_integer());
        CHECK(sq.integer_value() == legendre(-1, p) * p);
    }
}

TEST_CASE("galois action permutes roots and fixes integers") {
    Cyclotomic e = Cyclotomic::root_power(3, 2, 1);
    CHECK(e.galois(4) == Cyclotomic::root_power(3, 2, 4));
    CHECK(e.galois(-1) == Cyclotomic::root_power(3, 2, 8));
    Cyclotomic n = Cyclotomic::integer(3, 2, 42);
    CHECK(n.galois(5) == n);
    CHECK_THROWS_AS(e.galois(3), std::invalid_argument);
}

TEST_CASE("galois action is a ring homomorphism (random inputs)") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Cyclotomic a(5, 2), b(5, 2);
        std::vector<long long> ca(a.phi()), cb(b.phi());
        for (auto& x : ca) x = static_cast<long long>(rng() % 11) - 5;
        for (auto& x : cb) x = static_cast<long long>(rng() % 11) - 5;
        a = Cyclotomic::zero(5, 2);
        b = Cyclotomic::zero(5, 2);
        for (int i = 0; i < 20; ++i) {
            a += Cyclotomic::root_power(5, 2, i) * ca[i];
            b += Cyclotomic::root_power(5, 2, i) * cb[i];
        }
        long long n = 3 + 5 * (rng() % 4);  // unit mod 25
        CHECK((a * b).galois(n) == a.galois(n) * b.galois(n));
        CHECK((a + b).galois(n) == a.galois(n) + b.galois(n));
    }
}

TEST_CASE("root powers wrap modulo the level") {
    CHECK(Cyclotomic::root_power(3, 2, 9) == Cyclotomic::integer(3, 2, 1));
    CHECK(Cyclotomic::root_power(3, 2, 10) == Cyclotomic::root_power(3, 2, 1));
    // sum of all p-th roots of unity vanishes
    Cyclotomic acc(3, 1);
    for (int e = 0; e < 3; ++e) acc += Cyclotomic::root_power(3, 1, e);
    CHECK(acc.is_zero());
    // and at level p^2 the full sum of a primitive orbit vanishes too
    Cyclotomic acc2(3, 2);
    for (int e = 0; e < 9; ++e) acc2 += Cyclotomic::root_power(3, 2, e);
    CHECK(acc2.is_zero());
}

TEST_CASE("lift to a higher level is multiplicative") {
    Cyclotomic a = omega_qr(3, 1);
    Cyclotomic b = gauss_sum(3, 1);
    Cyclotomic al = a.lift_to_level(2), bl = b.lift_to_level(2);
    CHECK(al == omega_qr(3, 2));
    CHECK(bl == gauss_sum(3, 2));
    CHECK((a * b).lift_to_level(2) == al * bl);
}

TEST_CASE("conjugation composes to identity") {
    Cyclotomic g = gauss_sum(5, 1);
    CHECK(g.conj().conj() == g);
    // conj(gauss) = (-1|p) gauss
    Cyclotomic want = g * legendre(-1, 5);
    CHECK(g.conj() == want);
}
