#include <catch2/catch_amalgamated.hpp>

#include "harmonia/bernoulli.hpp"
#include "harmonia/scan.hpp"

using namespace harmonia;

TEST_CASE("BigRational stays reduced with a positive denominator") {
    BigRational x(2, -4);
    CHECK(x.num() == -1);
    CHECK(x.den() == 2);
    CHECK(x == BigRational(-1, 2));

    BigRational y(6, 3);
    CHECK(y.num() == 2);
    CHECK(y.den() == 1);
    CHECK(y.is_integer());

    CHECK((BigRational(1, 3) + BigRational(1, 6)).den() == 2);
    CHECK((BigRational(1, 2) * BigRational(2, 3)) == BigRational(1, 3));
    CHECK((BigRational(1, 2) - BigRational(1, 2)).is_zero());
    CHECK(BigRational(1, 2) / BigRational(1, 4) == BigRational(2));
    CHECK(-BigRational(3, 7) == BigRational(-3, 7));
    CHECK(BigRational(1, 3) < BigRational(1, 2));

    CHECK_THROWS_AS(BigRational(1, 0), Error);
    CHECK_THROWS_AS(BigRational(1, 2) / BigRational(0), Error);

    // residue embedding agrees with the small-integer path
    auto r49 = make_ring(7, 2);
    CHECK(rational_residue(BigRational(-9, 10), r49) == rational_residue(-9, 10, r49));
    CHECK(rational_residue(BigRational(4, 5), r49).value() == 40);
    CHECK_THROWS_AS(rational_residue(BigRational(1, 7), r49), NotInvertible);
}

TEST_CASE("exact Bernoulli numbers from the defining recurrence") {
    CHECK(bernoulli_exact(0) == BigRational(1));
    CHECK(bernoulli_exact(1) == BigRational(-1, 2));
    CHECK(bernoulli_exact(2) == BigRational(1, 6));
    CHECK(bernoulli_exact(3) == BigRational(0));
    CHECK(bernoulli_exact(4) == BigRational(-1, 30));
    CHECK(bernoulli_exact(6) == BigRational(1, 42));
    CHECK(bernoulli_exact(8) == BigRational(-1, 30));
    CHECK(bernoulli_exact(10) == BigRational(5, 66));
    CHECK(bernoulli_exact(12) == BigRational(-691, 2730));

    for (std::size_t n = 3; n <= 99; n += 2) CHECK(bernoulli_exact(n).is_zero());
}

TEST_CASE("von Staudt-Clausen: B_n plus sum of 1/q over primes with (q-1) | n is integral") {
    for (std::size_t n = 2; n <= 60; n += 2) {
        BigRational x = bernoulli_exact(n);
        for (u64 q : sieve_primes(2, n + 1))
            if (n % (q - 1) == 0) x += BigRational(1, static_cast<long>(q));
        CHECK(x.is_integer());
    }
}

TEST_CASE("bernoulli_mod_p reduces the recurrence into Z/pZ") {
    CHECK(bernoulli_mod_p(0, 7).value() == 1);
    CHECK(bernoulli_mod_p(0, 101).value() == 1);
    CHECK(bernoulli_mod_p(2, 7).value() == 6); // 1/6 and 6*6 == 36 == 1 (mod 7)
    CHECK(bernoulli_mod_p(3, 11).value() == 0);

    // agrees with the reduction of the exact value
    for (u64 p : {7ull, 11ull, 13ull, 31ull, 97ull}) {
        auto ring = make_ring(p, 1);
        for (u64 n = 0; n + 3 <= p; ++n)
            CHECK(bernoulli_mod_p(n, p) == rational_residue(bernoulli_exact(n), ring));
    }

    CHECK_THROWS_AS(bernoulli_mod_p(5, 7), DenominatorDivisibleByP);
    CHECK_THROWS_AS(bernoulli_mod_p(199, 199), DenominatorDivisibleByP);
    CHECK_THROWS_AS(bernoulli_mod_p(2, 6), CompositeModulusBase);
}

TEST_CASE("b_target computes B_{p-5} mod p by the p-divisible power sum") {
    // p=7: sum x^2 = 91 = 7*13, 13 mod 7 = 6 = B_2 mod 7
    CHECK(b_target(7).value() == 6);
    // p=11: sum x^6 = 55 mod 121, 55/11 = 5 = B_6 mod 11
    CHECK(b_target(11).value() == 5);
    // p=13: B_8 = -1/30 mod 13 = 3
    CHECK(b_target(13).value() == 3);
    CHECK(b_target(13) == bernoulli_mod_p(8, 13));

    CHECK_THROWS_AS(b_target(5), BadPrime);
    CHECK_THROWS_AS(b_target(2), BadPrime);
    CHECK_THROWS_AS(b_target(10), CompositeModulusBase);
}

TEST_CASE("power-sum and recurrence methods agree for every prime up to 499") {
    for (u64 p : sieve_primes(7, 499)) CHECK(b_target(p) == bernoulli_mod_p(p - 5, p));
}

TEST_CASE("exact reduction agrees with both modular methods up to 199") {
    for (u64 p : sieve_primes(7, 199)) {
        auto ring = make_ring(p, 1);
        CHECK(b_target(p) == rational_residue(bernoulli_exact(p - 5), ring));
    }
}
