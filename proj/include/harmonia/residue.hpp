#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "harmonia/errors.hpp"

namespace harmonia {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all n < 2^64 with this base set.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// gcd(a, b) together with x such that a*x == gcd (mod b). a, b > 0.
inline u64 egcd_inverse(u64 a, u64 m, u64& gcd_out) {
    i64 old_r = static_cast<i64>(a), r = static_cast<i64>(m);
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    gcd_out = static_cast<u64>(old_r);
    i64 x = old_s % static_cast<i64>(m);
    if (x < 0) x += static_cast<i64>(m);
    return static_cast<u64>(x);
}

} // namespace detail

inline bool is_prime(u64 n) { return detail::is_prime_u64(n); }

// Arithmetic context Z/p^e Z (p prime, e in {1,2}). Raw operations work on
// canonical values in [0, m) without per-call validation; the Residue wrapper
// below adds the checked layer.
class ResidueRing {
public:
    constexpr ResidueRing() = default;

    u64 prime() const { return p_; }
    int exponent() const { return e_; }
    u64 modulus() const { return m_; }

    bool operator==(const ResidueRing& o) const { return p_ == o.p_ && e_ == o.e_; }
    bool operator!=(const ResidueRing& o) const { return !(*this == o); }

    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= m_ ? s - m_ : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (m_ - b); }
    u64 neg(u64 a) const { return a == 0 ? 0 : m_ - a; }
    u64 mul(u64 a, u64 b) const { return detail::mulmod(a, b, m_); }
    u64 pow(u64 a, u64 n) const { return detail::powmod(a, n, m_); }

    u64 inv(u64 a) const {
        a %= m_;
        if (a == 0) throw NotInvertible("inv: 0 is not invertible");
        u64 g = 0;
        u64 x = detail::egcd_inverse(a, m_, g);
        if (g != 1) throw NotInvertible("inv: argument shares a factor with the modulus");
        return x;
    }

    // Reduce an arbitrary signed integer into [0, m).
    u64 reduce(i64 x) const {
        i64 r = x % static_cast<i64>(m_);
        if (r < 0) r += static_cast<i64>(m_);
        return static_cast<u64>(r);
    }

private:
    friend ResidueRing make_ring(u64 p, int e);
    ResidueRing(u64 p, int e, u64 m) : p_(p), e_(e), m_(m) {}

    u64 p_ = 0;
    int e_ = 0;
    u64 m_ = 0;
};

inline ResidueRing make_ring(u64 p, int e) {
    if (e != 1 && e != 2) throw BadExponent("make_ring: exponent must be 1 or 2");
    constexpr u64 kLimit = 1ull << 63;
    if (e == 1) {
        if (p >= kLimit) throw Overflow("make_ring: modulus must be < 2^63");
    } else {
        // p^2 < 2^63  <=>  p <= floor(sqrt(2^63 - 1)) = 3037000499
        if (p > 3037000499ull) throw Overflow("make_ring: p^2 must be < 2^63");
    }
    if (!detail::is_prime_u64(p))
        throw CompositeModulusBase("make_ring: " + std::to_string(p) + " is not prime");
    u64 m = (e == 1) ? p : p * p;
    return ResidueRing(p, e, m);
}

// Canonical element of Z/p^e Z. Value semantics; mixing rings throws.
class Residue {
public:
    Residue() = default;
    Residue(u64 value, ResidueRing ring) : value_(value % ring.modulus()), ring_(ring) {}

    u64 value() const { return value_; }
    const ResidueRing& ring() const { return ring_; }

    friend Residue operator+(const Residue& a, const Residue& b) {
        check_same(a, b);
        return Residue(a.ring_.add(a.value_, b.value_), a.ring_, unchecked{});
    }
    friend Residue operator-(const Residue& a, const Residue& b) {
        check_same(a, b);
        return Residue(a.ring_.sub(a.value_, b.value_), a.ring_, unchecked{});
    }
    friend Residue operator*(const Residue& a, const Residue& b) {
        check_same(a, b);
        return Residue(a.ring_.mul(a.value_, b.value_), a.ring_, unchecked{});
    }
    Residue operator-() const { return Residue(ring_.neg(value_), ring_, unchecked{}); }

    friend bool operator==(const Residue& a, const Residue& b) {
        check_same(a, b);
        return a.value_ == b.value_;
    }
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

private:
    struct unchecked {};
    Residue(u64 v, ResidueRing r, unchecked) : value_(v), ring_(r) {}

    static void check_same(const Residue& a, const Residue& b) {
        if (a.ring_ != b.ring_)
            throw RingMismatch("arithmetic between residues of different rings");
    }

    u64 value_ = 0;
    ResidueRing ring_;
};

inline Residue mul(const Residue& a, const Residue& b) { return a * b; }

inline Residue inv(const Residue& a) {
    return Residue(a.ring().inv(a.value()), a.ring());
}

namespace detail {

// Inverses of the consecutive integers first, first+1, ..., first+count-1 in
// one egcd plus 3(count-1) multiplications. All values must be coprime to p.
// Writes into out[0..count); out[i] = (first + i)^-1 mod m.
inline void batch_invert_consecutive(const ResidueRing& ring, u64 first, std::size_t count,
                                     std::span<u64> out) {
    if (count == 0) return;
    out[0] = first % ring.modulus();
    for (std::size_t i = 1; i < count; ++i)
        out[i] = ring.mul(out[i - 1], (first + i) % ring.modulus());
    u64 run = ring.inv(out[count - 1]); // inverse of the full product
    for (std::size_t i = count - 1; i > 0; --i) {
        u64 inv_i = ring.mul(run, out[i - 1]);
        run = ring.mul(run, (first + i) % ring.modulus());
        out[i] = inv_i;
    }
    out[0] = run;
}

inline constexpr std::size_t kinversion_block = 4096;

} // namespace detail

// [inv(1), ..., inv(n)]; requires n < p so every k <= n is invertible.
// Processes fixed-size blocks to bound transient memory.
inline std::vector<Residue> batch_inverses(u64 n, const ResidueRing& ring) {
    if (n >= ring.prime()) throw BadRange("batch_inverses: n must be < p");
    std::vector<Residue> result;
    result.reserve(n);
    std::vector<u64> block(std::min<std::size_t>(n, detail::kinversion_block));
    for (u64 lo = 1; lo <= n; lo += block.size()) {
        std::size_t count = static_cast<std::size_t>(std::min<u64>(block.size(), n - lo + 1));
        detail::batch_invert_consecutive(ring, lo, count, block);
        for (std::size_t i = 0; i < count; ++i)
            result.emplace_back(block[i], ring);
    }
    return result;
}

// num/den as an element of the ring; either argument may be negative.
inline Residue rational_residue(i64 num, i64 den, const ResidueRing& ring) {
    if (den == 0) throw Error("rational_residue: zero denominator");
    u64 d = ring.reduce(den);
    if (d % ring.prime() == 0)
        throw NotInvertible("rational_residue: denominator divisible by p");
    return Residue(ring.mul(ring.reduce(num), ring.inv(d)), ring);
}

} // namespace harmonia
