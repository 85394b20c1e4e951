#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include "harmonia/bigrational.hpp"
#include "harmonia/errors.hpp"
#include "harmonia/residue.hpp"

namespace harmonia {

// B_n by the defining recurrence B_0 = 1, sum_{k=0}^{n} C(n+1,k) B_k = 0,
// i.e. B_n = -1/(n+1) * sum_{k<n} C(n+1,k) B_k. Memoized; the table is
// guarded so concurrent scan workers may call in.
inline BigRational bernoulli_exact(std::size_t n) {
    static std::vector<BigRational> table{BigRational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= n) {
        std::size_t i = table.size();
        BigRational acc(0);
        for (std::size_t k = 0; k < i; ++k) {
            if (table[k].is_zero()) continue;
            BigInt c;
            mpz_bin_uiui(c.get_mpz_t(), i + 1, k);
            acc += BigRational(c, 1) * table[k];
        }
        table.push_back(-acc / BigRational(static_cast<long>(i + 1)));
    }
    return table[n];
}

// Image of B_n in Z/pZ via the same recurrence run in the ring, with the
// binomial coefficients built as a Pascal row mod p. Valid while every
// recurrence denominator k+1 <= n+1 stays invertible, i.e. n <= p-3.
inline Residue bernoulli_mod_p(u64 n, u64 p) {
    ResidueRing ring = make_ring(p, 1);
    if (n + 3 > p)
        throw DenominatorDivisibleByP("bernoulli_mod_p: requires n <= p - 3");
    std::vector<u64> b(n + 1, 0);
    b[0] = 1 % p;
    // row[k] = C(i+1, k) mod p, maintained as i grows
    std::vector<u64> row(n + 2, 0);
    row[0] = 1;
    row[1] = 1; // C(1, *)
    for (u64 i = 1; i <= n; ++i) {
        // degree i -> i+1
        for (u64 k = i + 1; k > 0; --k) row[k] = ring.add(row[k], row[k - 1]);
        u64 acc = 0;
        for (u64 k = 0; k < i; ++k)
            if (b[k]) acc = ring.add(acc, ring.mul(row[k], b[k]));
        b[i] = ring.mul(ring.neg(acc), ring.inv((i + 1) % p));
    }
    return Residue(b[n], ring);
}

// B_{p-5} mod p through the power sum S = sum_{x=1}^{p-1} x^{p-5} (mod p^2),
// which equals p * B_{p-5} mod p^2 for p >= 7. The powers are maintained
// multiplicatively: one powmod per prime x, one product per composite x.
inline Residue b_target(u64 p) {
    if (p < 7) throw BadPrime("b_target: requires p >= 7");
    ResidueRing ring2 = make_ring(p, 2);
    const u64 n = p - 1;
    const u64 exp = p - 5;
    std::vector<u64> pw(n + 1, 0);
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint32_t> primes;
    pw[1] = 1;
    u64 sum = 1; // x = 1 term
    for (u64 x = 2; x <= n; ++x) {
        if (!composite[x]) {
            primes.push_back(static_cast<std::uint32_t>(x));
            pw[x] = ring2.pow(x, exp);
        }
        for (u64 q : primes) {
            if (q * x > n) break;
            composite[q * x] = true;
            pw[q * x] = ring2.mul(pw[q], pw[x]);
            if (x % q == 0) break;
        }
        sum = ring2.add(sum, pw[x]);
    }
    if (sum % p != 0)
        throw Error("b_target: power sum not divisible by p (non-prime modulus?)");
    return Residue((sum / p) % p, make_ring(p, 1));
}

} // namespace harmonia
