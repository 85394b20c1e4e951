#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "harmonia/exact_oracle.hpp"
#include "harmonia/harmonic.hpp"
#include "harmonia/scan.hpp"

using namespace harmonia;

namespace {

// golden residues mod p^2, frozen from an exact-rational brute force
struct Golden {
    u64 p;
    u64 P2, P4, D13, D31, D22, D21, T211, T121, S1, S2, S3, Tcube, U;
};

constexpr Golden kGolden[] = {
    {7, 14, 14, 21, 14, 42, 32, 35, 21, 14, 14, 35, 14, 21},
    {11, 110, 44, 11, 66, 99, 95, 33, 11, 44, 22, 55, 11, 11},
    {13, 156, 65, 117, 156, 52, 86, 91, 117, 65, 143, 13, 91, 117},
};

void check_against_golden(const HarmonicProfile& prof, const Golden& g) {
    CHECK(prof.p == g.p);
    CHECK(prof.h_last == 0); // Wolstenholme
    CHECK(prof.P1 == 0);
    CHECK(prof.P2 == g.P2);
    CHECK(prof.P4 == g.P4);
    CHECK(prof.D13 == g.D13);
    CHECK(prof.D31 == g.D31);
    CHECK(prof.D22 == g.D22);
    CHECK(prof.D21 == g.D21);
    CHECK(prof.T211 == g.T211);
    CHECK(prof.T121 == g.T121);
    CHECK(prof.S1 == g.S1);
    CHECK(prof.S2 == g.S2);
    CHECK(prof.S3 == g.S3);
    CHECK(prof.Tcube == g.Tcube);
    CHECK(prof.U == g.U);
    CHECK(prof.reflection_ok);
    CHECK(prof.reflection_defect == 0);
}

} // namespace

TEST_CASE("compute_profile reproduces the exact-rational golden values") {
    for (const Golden& g : kGolden) {
        check_against_golden(compute_profile(g.p), g);
        check_against_golden(naive_profile(g.p), g);
    }
}

TEST_CASE("profile-internal identities") {
    for (u64 p : {7ull, 11ull, 101ull, 1009ull}) {
        auto prof = compute_profile(p);
        CHECK(prof.U == prof.D13);                              // sum H_{k-1}/k^3 = H(1,3)
        CHECK(prof.ring.add(prof.U, prof.P4) == prof.S3);       // sum H_k/k^3 = H(1,3) + H(4)
        CHECK(prof.h_last == prof.P1);
    }
}

TEST_CASE("engine preconditions") {
    CHECK_THROWS_AS(compute_profile(5), BadPrime);
    CHECK_THROWS_AS(compute_profile(2), BadPrime);
    CHECK_THROWS_AS(compute_profile(9), BadPrime);
    CHECK_THROWS_AS(compute_profile(10007ull * 2), BadPrime);
    // 2^31 + 11 is prime but past the engine bound
    CHECK_THROWS_AS(compute_profile(2147483659ull), Overflow);

    CHECK_THROWS_AS(naive_profile(5), BadPrime);
    CHECK_THROWS_AS(naive_profile(1009), TooLarge);
}

TEST_CASE("streaming engine equals the literal-loop twin for every prime up to 97") {
    for (u64 p : sieve_primes(7, 97)) {
        auto fast = compute_profile(p);
        auto slow = naive_profile(p);
        for (const auto& [field, equal] : compare_profiles(fast, slow)) {
            INFO("p=" << p << " field=" << field);
            CHECK(equal);
        }
    }
}

TEST_CASE("the pass crosses inversion-block boundaries cleanly") {
    // 5003 > block size 4096, so the pass spans two blocks
    auto prof = compute_profile(5003);
    auto ring = prof.ring;
    CHECK(prof.h_last == mhs({1}, 5002, ring).value());
    CHECK(prof.P4 == mhs({4}, 5002, ring).value());
    CHECK(prof.reflection_ok);
}

TEST_CASE("mhs evaluates strictly increasing tuples") {
    auto r49 = make_ring(7, 2);
    CHECK(mhs({1, 1}, 2, r49) == rational_residue(1, 2, r49));
    CHECK(mhs({1, 1, 1}, 3, r49) == rational_residue(1, 6, r49));
    CHECK(mhs({1, 3}, 6, r49).value() == 21);
    CHECK(mhs({1}, 0, r49).value() == 0);
    CHECK(mhs({2, 1, 1}, 2, r49).value() == 0); // no 3-tuple fits below 3

    CHECK_THROWS_AS(mhs({1}, 7, r49), BadRange);
    CHECK_THROWS_AS(Composition({1, 2, 3, 4}), Error);
    CHECK_THROWS_AS(Composition({0}), Error);

    // depth-2 against the profile fields
    auto prof = compute_profile(11);
    auto r121 = prof.ring;
    CHECK(mhs({2, 1}, 10, r121).value() == prof.D21);
    CHECK(mhs({2, 2}, 10, r121).value() == prof.D22);
    CHECK(mhs({2, 1, 1}, 10, r121).value() == prof.T211);
    CHECK(mhs({1, 2, 1}, 10, r121).value() == prof.T121);
}

TEST_CASE("stuffle relations hold in-ring for arbitrary upper bounds") {
    for (auto ring : {make_ring(101, 2), make_ring(97, 1), make_ring(13, 2)}) {
        const u64 nmax = std::min<u64>(ring.prime() - 1, 60);
        for (u64 n = 0; n <= nmax; ++n) {
            // H(1)H(3) = H(1,3) + H(3,1) + H(4)
            CHECK(mhs({1}, n, ring) * mhs({3}, n, ring) ==
                  mhs({1, 3}, n, ring) + mhs({3, 1}, n, ring) + mhs({4}, n, ring));
            // H(1)H(2,1) = 2H(2,1,1) + H(1,2,1) + H(3,1) + H(2,2)
            auto t211 = mhs({2, 1, 1}, n, ring);
            CHECK(mhs({1}, n, ring) * mhs({2, 1}, n, ring) ==
                  t211 + t211 + mhs({1, 2, 1}, n, ring) + mhs({3, 1}, n, ring) +
                      mhs({2, 2}, n, ring));
        }
    }
}

TEST_CASE("telescoping and expansion identities hold in-ring at any upper bound") {
    // independent reimplementation over prefix sums, not the engine accumulators
    auto sums_upto = [](u64 N, const ResidueRing& ring) {
        struct Sums {
            u64 tcube = 0, s1 = 0, s2 = 0, u = 0, p4 = 0, h = 0;
        } s;
        u64 H = 0;
        for (u64 k = 1; k <= N; ++k) {
            const u64 ik = ring.inv(k);
            const u64 ik2 = ring.mul(ik, ik);
            const u64 ik3 = ring.mul(ik2, ik);
            const u64 h_prev = H;
            const u64 h_prev3 = ring.mul(ring.mul(h_prev, h_prev), h_prev);
            s.tcube = ring.add(s.tcube, ring.mul(h_prev3, ik));
            s.u = ring.add(s.u, ring.mul(h_prev, ik3));
            H = ring.add(H, ik);
            s.s1 = ring.add(s.s1, ring.mul(ring.mul(H, H), ik2));
            s.s2 = ring.add(s.s2, ring.mul(ring.mul(ring.mul(H, H), H), ik));
            s.p4 = ring.add(s.p4, ring.mul(ik3, ik));
        }
        s.h = H;
        return s;
    };
    for (auto ring : {make_ring(199, 2), make_ring(4099, 1)}) {
        for (u64 N : {u64{1}, u64{2}, u64{5}, u64{41}, u64{100}, ring.prime() - 1}) {
            auto s = sums_upto(N, ring);
            const u64 h4 = ring.mul(ring.mul(s.h, s.h), ring.mul(s.h, s.h));
            // 4*sum H_{k-1}^3/k + 6*sum H_k^2/k^2 - 8*sum H_{k-1}/k^3 - 5*sum 1/k^4 = H_N^4
            u64 lhs = ring.mul(4, s.tcube);
            lhs = ring.add(lhs, ring.mul(6, s.s1));
            lhs = ring.sub(lhs, ring.mul(8, s.u));
            lhs = ring.sub(lhs, ring.mul(5, s.p4));
            CHECK(lhs == h4);
            // sum H_{k-1}^3/k = sum H_k^3/k - 3*sum H_k^2/k^2 + 3*sum H_{k-1}/k^3 + 2*sum 1/k^4
            u64 rhs = ring.sub(s.s2, ring.mul(3, s.s1));
            rhs = ring.add(rhs, ring.mul(3, s.u));
            rhs = ring.add(rhs, ring.mul(2, s.p4));
            CHECK(s.tcube == rhs);
        }
    }
}
