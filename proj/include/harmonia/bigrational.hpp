#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "harmonia/errors.hpp"
#include "harmonia/residue.hpp"

namespace harmonia {

using BigInt = mpz_class;

// Exact fraction, always reduced with positive denominator.
class BigRational {
public:
    BigRational() : q_(0) {}
    BigRational(long n) : q_(static_cast<long>(n)) {}
    BigRational(int n) : q_(n) {}
    BigRational(long num, long den) {
        if (den == 0) throw Error("BigRational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    BigRational(BigInt num, BigInt den) {
        if (den == 0) throw Error("BigRational: zero denominator");
        q_ = mpq_class(std::move(num), std::move(den));
        q_.canonicalize();
    }
    explicit BigRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    std::string str() const { return q_.get_str(); }

    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw Error("BigRational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const { return BigRational(mpq_class(-q_)); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.q_ != b.q_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }

private:
    mpq_class q_;
};

inline u64 mod_u64(const BigInt& x, u64 m) {
    // m < 2^63 fits an unsigned long on this platform; fdiv gives a
    // non-negative remainder for negative x.
    return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(m));
}

// Image of an exact fraction in the ring; the denominator must be coprime to p.
inline Residue rational_residue(const BigRational& x, const ResidueRing& ring) {
    u64 d = mod_u64(x.den(), ring.modulus());
    if (d % ring.prime() == 0)
        throw NotInvertible("rational_residue: denominator divisible by p");
    return Residue(ring.mul(mod_u64(x.num(), ring.modulus()), ring.inv(d)), ring);
}

} // namespace harmonia
