#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "harmonia/errors.hpp"
#include "harmonia/residue.hpp"

namespace harmonia {

// Exponent tuple (s_1, ..., s_d) indexing a multiple harmonic sum
// sum_{i_1 < ... < i_d <= N} prod 1/i_t^{s_t}. Depth 1..3.
class Composition {
public:
    Composition(std::initializer_list<int> parts) {
        if (parts.size() < 1 || parts.size() > 3)
            throw Error("Composition: depth must be 1, 2 or 3");
        depth_ = static_cast<int>(parts.size());
        int i = 0;
        for (int s : parts) {
            if (s < 1) throw Error("Composition: parts must be >= 1");
            parts_[i++] = s;
        }
    }

    int depth() const { return depth_; }
    int part(int i) const { return parts_[i]; }

private:
    std::array<int, 3> parts_{};
    int depth_ = 0;
};

// Every per-prime quantity the congruence checks consume, as canonical
// residues mod p^2.
//
//   P(n)  = sum_{k<=p-1} 1/k^n            (P1..P4)
//   D(mn) = sum_{i<j<=p-1} 1/(i^m j^n)    (D21, D13, D31, D22)
//   T(..) = depth-3 sums                  (T211, T121)
//   S1 = sum H_k^2/k^2,  S2 = sum H_k^3/k,  S3 = sum H_k/k^3
//   Tcube = sum H_{k-1}^3/k,  U = sum H_{k-1}/k^3
struct HarmonicProfile {
    u64 p = 0;
    ResidueRing ring; // modulus p^2

    u64 h_last = 0; // H_{p-1}
    u64 P1 = 0, P2 = 0, P3 = 0, P4 = 0;
    u64 D21 = 0, D13 = 0, D31 = 0, D22 = 0;
    u64 T211 = 0, T121 = 0;
    u64 S1 = 0, S2 = 0, S3 = 0;
    u64 Tcube = 0, U = 0;

    bool reflection_ok = false;
    u64 reflection_defect = 0; // first nonzero suffix+H_j residue, 0 when ok
};

namespace detail {

inline void require_engine_prime(u64 p) {
    if (p >= (1ull << 31)) throw Overflow("profile: requires p < 2^31");
    if (p < 7 || !is_prime_u64(p)) throw BadPrime("profile: requires a prime p >= 7");
}

} // namespace detail

// One forward pass k = 1..p-1 over Z/p^2 Z. Batch inverses feed running
// prefix accumulators; nested prefixes give the double and triple sums with
// strict i < j < k semantics (each depth-3 and depth-2 accumulator consumes
// the prefix values *before* k's own contribution lands). A second,
// descending pass accumulates the suffix sums for the reflection check.
// O(p) multiplications, O(block) memory.
inline HarmonicProfile compute_profile(u64 p) {
    detail::require_engine_prime(p);
    ResidueRing ring = make_ring(p, 2);

    HarmonicProfile prof;
    prof.p = p;
    prof.ring = ring;

    const u64 n = p - 1;
    std::vector<u64> invs(std::min<u64>(n, detail::kinversion_block));

    u64 H = 0, A2 = 0, A3 = 0, A4 = 0;
    u64 W12 = 0;       // sum_{i<j<=k} 1/(i j^2), feeds T121
    u64 h3_prev = 0;   // H_{k-1}^3
    for (u64 lo = 1; lo <= n; lo += invs.size()) {
        const std::size_t count = static_cast<std::size_t>(std::min<u64>(invs.size(), n - lo + 1));
        detail::batch_invert_consecutive(ring, lo, count, invs);
        for (std::size_t idx = 0; idx < count; ++idx) {
            const u64 ik = invs[idx];
            const u64 ik2 = ring.mul(ik, ik);
            const u64 ik3 = ring.mul(ik2, ik);
            const u64 ik4 = ring.mul(ik2, ik2);

            // strict-inequality sums first: these see only i, j < k
            prof.T211 = ring.add(prof.T211, ring.mul(ik, prof.D21));
            prof.T121 = ring.add(prof.T121, ring.mul(ik, W12));
            const u64 h_over_k3 = ring.mul(H, ik3);
            prof.D13 = ring.add(prof.D13, h_over_k3);
            prof.U = ring.add(prof.U, h_over_k3);
            prof.D31 = ring.add(prof.D31, ring.mul(ik, A3));
            prof.D22 = ring.add(prof.D22, ring.mul(ik2, A2));
            prof.D21 = ring.add(prof.D21, ring.mul(ik, A2));
            W12 = ring.add(W12, ring.mul(ik2, H));
            prof.Tcube = ring.add(prof.Tcube, ring.mul(ik, h3_prev));

            // now fold k itself into the prefixes
            H = ring.add(H, ik);
            A2 = ring.add(A2, ik2);
            A3 = ring.add(A3, ik3);
            A4 = ring.add(A4, ik4);
            const u64 h2 = ring.mul(H, H);
            const u64 h3 = ring.mul(h2, H);
            prof.S1 = ring.add(prof.S1, ring.mul(h2, ik2));
            prof.S2 = ring.add(prof.S2, ring.mul(h3, ik));
            prof.S3 = ring.add(prof.S3, ring.mul(H, ik3));
            h3_prev = h3;
        }
        // the H prefix advances by H_k = H_{k-1} + 1/k; spot-check the 1/k
        // feed against a direct egcd inversion once per block
        const u64 k = lo + count - 1;
        if (invs[count - 1] != ring.inv(k))
            throw Error("compute_profile: batch inversion mismatch at k=" + std::to_string(k));
    }
    prof.h_last = H;
    prof.P1 = H;
    prof.P2 = A2;
    prof.P3 = A3;
    prof.P4 = A4;

    // reflection pass: T_j = 1/(j+1) + ... + 1/(p-1) vs -H_j, j = p-2 .. 1
    prof.reflection_ok = true;
    u64 suffix = 0;
    u64 h_desc = H; // H_j while descending
    u64 hi = n;     // inverses of [hi-count+1, hi] still to consume
    while (hi >= 2) {
        const std::size_t count = static_cast<std::size_t>(std::min<u64>(invs.size(), hi - 1));
        const u64 first = hi - count + 1;
        detail::batch_invert_consecutive(ring, first, count, invs);
        for (std::size_t idx = count; idx > 0; --idx) {
            // consuming k = first+idx-1 as the j+1 term, so j = k-1 >= 1
            const u64 ik = invs[idx - 1];
            suffix = ring.add(suffix, ik);
            h_desc = ring.sub(h_desc, ik);
            const u64 defect = ring.add(suffix, h_desc);
            if (defect != 0 && prof.reflection_ok) {
                prof.reflection_ok = false;
                prof.reflection_defect = defect;
            }
        }
        hi = first - 1;
    }
    return prof;
}

// Oracle twin of compute_profile: the defining sums evaluated by literal
// nested loops, no prefix tricks. Cubic in p.
inline HarmonicProfile naive_profile(u64 p) {
    if (p > 1000) throw TooLarge("naive_profile: requires p <= 1000");
    detail::require_engine_prime(p);
    ResidueRing ring = make_ring(p, 2);

    const u64 n = p - 1;
    std::vector<u64> iv(n + 1, 0);
    for (u64 k = 1; k <= n; ++k) iv[k] = ring.inv(k); // one egcd per element, no batch trick
    auto ipow = [&](u64 k, int s) {
        u64 r = iv[k];
        for (int t = 1; t < s; ++t) r = ring.mul(r, iv[k]);
        return r;
    };
    std::vector<u64> Hs(n + 1, 0);
    for (u64 k = 1; k <= n; ++k) {
        u64 h = 0;
        for (u64 i = 1; i <= k; ++i) h = ring.add(h, iv[i]);
        Hs[k] = h;
    }

    HarmonicProfile prof;
    prof.p = p;
    prof.ring = ring;
    for (u64 k = 1; k <= n; ++k) {
        prof.P1 = ring.add(prof.P1, ipow(k, 1));
        prof.P2 = ring.add(prof.P2, ipow(k, 2));
        prof.P3 = ring.add(prof.P3, ipow(k, 3));
        prof.P4 = ring.add(prof.P4, ipow(k, 4));
    }
    prof.h_last = Hs[n];
    auto double_sum = [&](int m, int s) {
        u64 acc = 0;
        for (u64 j = 2; j <= n; ++j)
            for (u64 i = 1; i < j; ++i)
                acc = ring.add(acc, ring.mul(ipow(i, m), ipow(j, s)));
        return acc;
    };
    prof.D21 = double_sum(2, 1);
    prof.D13 = double_sum(1, 3);
    prof.D31 = double_sum(3, 1);
    prof.D22 = double_sum(2, 2);
    auto triple_sum = [&](int a, int b, int c) {
        u64 acc = 0;
        for (u64 k = 3; k <= n; ++k)
            for (u64 j = 2; j < k; ++j)
                for (u64 i = 1; i < j; ++i)
                    acc = ring.add(acc,
                                   ring.mul(ring.mul(ipow(i, a), ipow(j, b)), ipow(k, c)));
        return acc;
    };
    prof.T211 = triple_sum(2, 1, 1);
    prof.T121 = triple_sum(1, 2, 1);
    for (u64 k = 1; k <= n; ++k) {
        const u64 hk = Hs[k];
        const u64 hk1 = Hs[k - 1];
        prof.S1 = ring.add(prof.S1, ring.mul(ring.mul(hk, hk), ipow(k, 2)));
        prof.S2 = ring.add(prof.S2, ring.mul(ring.mul(ring.mul(hk, hk), hk), iv[k]));
        prof.S3 = ring.add(prof.S3, ring.mul(hk, ipow(k, 3)));
        prof.Tcube = ring.add(prof.Tcube, ring.mul(ring.mul(ring.mul(hk1, hk1), hk1), iv[k]));
        prof.U = ring.add(prof.U, ring.mul(hk1, ipow(k, 3)));
    }
    prof.reflection_ok = true;
    for (u64 j = 1; j + 1 <= n; ++j) {
        u64 suffix = 0;
        for (u64 k = j + 1; k <= n; ++k) suffix = ring.add(suffix, iv[k]);
        const u64 defect = ring.add(suffix, Hs[j]);
        if (defect != 0) {
            prof.reflection_ok = false;
            prof.reflection_defect = defect;
            break;
        }
    }
    return prof;
}

// sum over 1 <= i_1 < ... < i_d <= N of prod 1/i_t^{s_t} in the given ring.
inline Residue mhs(const Composition& c, u64 N, const ResidueRing& ring) {
    if (N >= ring.prime()) throw BadRange("mhs: requires N < p");
    std::vector<u64> iv(static_cast<std::size_t>(N) + 1, 0);
    if (N >= 1)
        detail::batch_invert_consecutive(ring, 1, static_cast<std::size_t>(N),
                                         std::span<u64>(iv.data() + 1, static_cast<std::size_t>(N)));
    auto ipow = [&](u64 k, int s) {
        u64 r = iv[k];
        for (int t = 1; t < s; ++t) r = ring.mul(r, iv[k]);
        return r;
    };
    u64 acc = 0;
    switch (c.depth()) {
    case 1:
        for (u64 i = 1; i <= N; ++i) acc = ring.add(acc, ipow(i, c.part(0)));
        break;
    case 2:
        for (u64 j = 2; j <= N; ++j)
            for (u64 i = 1; i < j; ++i)
                acc = ring.add(acc, ring.mul(ipow(i, c.part(0)), ipow(j, c.part(1))));
        break;
    default:
        for (u64 k = 3; k <= N; ++k)
            for (u64 j = 2; j < k; ++j)
                for (u64 i = 1; i < j; ++i)
                    acc = ring.add(acc, ring.mul(ring.mul(ipow(i, c.part(0)), ipow(j, c.part(1))),
                                                 ipow(k, c.part(2))));
        break;
    }
    return Residue(acc, ring);
}

} // namespace harmonia
