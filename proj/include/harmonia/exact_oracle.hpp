#pragma once

#include <string>
#include <utility>
#include <vector>

#include "harmonia/bigrational.hpp"
#include "harmonia/errors.hpp"
#include "harmonia/harmonic.hpp"
#include "harmonia/residue.hpp"

namespace harmonia {

// The profile quantities over an upper bound N, valued exactly. Denominators
// only contain factors <= N, so any prime p > N reduces cleanly.
struct ExactProfile {
    u64 N = 0;

    BigRational h_last;
    BigRational P1, P2, P3, P4;
    BigRational D21, D13, D31, D22;
    BigRational T211, T121;
    BigRational S1, S2, S3;
    BigRational Tcube, U;

    std::vector<BigRational> h_prefix; // H_0 .. H_N, for the reflection reduction
};

// Every sum evaluated by literal nested loops in exact rational arithmetic.
// Cubic in N; the depth-3 sums dominate.
inline ExactProfile exact_profile(u64 N) {
    if (N < 1) throw BadRange("exact_profile: requires N >= 1");
    if (N > 200) throw TooLarge("exact_profile: requires N <= 200");

    ExactProfile e;
    e.N = N;
    e.h_prefix.assign(N + 1, BigRational(0));
    for (u64 k = 1; k <= N; ++k)
        e.h_prefix[k] = e.h_prefix[k - 1] + BigRational(1, static_cast<long>(k));
    e.h_last = e.h_prefix[N];

    auto term = [](u64 i, int s) {
        long d = 1;
        for (int t = 0; t < s; ++t) d *= static_cast<long>(i);
        return BigRational(1, d);
    };
    for (u64 k = 1; k <= N; ++k) {
        e.P1 += term(k, 1);
        e.P2 += term(k, 2);
        e.P3 += term(k, 3);
        e.P4 += term(k, 4);
    }
    auto double_sum = [&](int m, int s) {
        BigRational acc;
        for (u64 j = 2; j <= N; ++j)
            for (u64 i = 1; i < j; ++i)
                acc += term(i, m) * term(j, s);
        return acc;
    };
    e.D21 = double_sum(2, 1);
    e.D13 = double_sum(1, 3);
    e.D31 = double_sum(3, 1);
    e.D22 = double_sum(2, 2);
    auto triple_sum = [&](int a, int b, int c) {
        BigRational acc;
        for (u64 k = 3; k <= N; ++k)
            for (u64 j = 2; j < k; ++j)
                for (u64 i = 1; i < j; ++i)
                    acc += term(i, a) * term(j, b) * term(k, c);
        return acc;
    };
    e.T211 = triple_sum(2, 1, 1);
    e.T121 = triple_sum(1, 2, 1);
    for (u64 k = 1; k <= N; ++k) {
        const BigRational& hk = e.h_prefix[k];
        const BigRational& hk1 = e.h_prefix[k - 1];
        e.S1 += hk * hk * term(k, 2);
        e.S2 += hk * hk * hk * term(k, 1);
        e.S3 += hk * term(k, 3);
        e.Tcube += hk1 * hk1 * hk1 * term(k, 1);
        e.U += hk1 * term(k, 3);
    }
    return e;
}

// Field-wise image of an exact profile in Z/p^e Z; the ground truth the
// streaming engine is compared against. Requires p > N.
inline HarmonicProfile reduce_profile(const ExactProfile& e, const ResidueRing& ring) {
    if (ring.prime() <= e.N)
        throw NotInvertible("reduce_profile: requires p > N");

    auto red = [&](const BigRational& x) { return rational_residue(x, ring).value(); };

    HarmonicProfile prof;
    prof.p = ring.prime();
    prof.ring = ring;
    prof.h_last = red(e.h_last);
    prof.P1 = red(e.P1);
    prof.P2 = red(e.P2);
    prof.P3 = red(e.P3);
    prof.P4 = red(e.P4);
    prof.D21 = red(e.D21);
    prof.D13 = red(e.D13);
    prof.D31 = red(e.D31);
    prof.D22 = red(e.D22);
    prof.T211 = red(e.T211);
    prof.T121 = red(e.T121);
    prof.S1 = red(e.S1);
    prof.S2 = red(e.S2);
    prof.S3 = red(e.S3);
    prof.Tcube = red(e.Tcube);
    prof.U = red(e.U);

    prof.reflection_ok = true;
    for (u64 j = 1; j + 1 <= e.N; ++j) {
        // suffix 1/(j+1) + ... + 1/N equals H_N - H_j exactly
        const u64 suffix = red(e.h_last - e.h_prefix[j]);
        const u64 defect = ring.add(suffix, red(e.h_prefix[j]));
        if (defect != 0) {
            prof.reflection_ok = false;
            prof.reflection_defect = defect;
            break;
        }
    }
    return prof;
}

// Field-wise equality report between two profiles for the same prime.
inline std::vector<std::pair<std::string, bool>> compare_profiles(const HarmonicProfile& a,
                                                                  const HarmonicProfile& b) {
    if (a.p != b.p) throw PrimeMismatch("compare_profiles: profiles for different primes");
    std::vector<std::pair<std::string, bool>> out;
    auto cmp = [&](const char* name, u64 x, u64 y) { out.emplace_back(name, x == y); };
    cmp("h_last", a.h_last, b.h_last);
    cmp("P1", a.P1, b.P1);
    cmp("P2", a.P2, b.P2);
    cmp("P3", a.P3, b.P3);
    cmp("P4", a.P4, b.P4);
    cmp("D21", a.D21, b.D21);
    cmp("D13", a.D13, b.D13);
    cmp("D31", a.D31, b.D31);
    cmp("D22", a.D22, b.D22);
    cmp("T211", a.T211, b.T211);
    cmp("T121", a.T121, b.T121);
    cmp("S1", a.S1, b.S1);
    cmp("S2", a.S2, b.S2);
    cmp("S3", a.S3, b.S3);
    cmp("Tcube", a.Tcube, b.Tcube);
    cmp("U", a.U, b.U);
    out.emplace_back("reflection_ok", a.reflection_ok == b.reflection_ok);
    return out;
}

} // namespace harmonia
