#pragma once

#include <array>
#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include "harmonia/bernoulli.hpp"
#include "harmonia/errors.hpp"
#include "harmonia/harmonic.hpp"
#include "harmonia/residue.hpp"

namespace harmonia {

// A congruence (or in-ring identity) the suite verifies. min_prime is the
// smallest prime the statement covers; checks with modulus_exponent 1 are
// evaluated mod p, the rest mod p^2.
struct CheckDescriptor {
    std::string_view id;
    std::string_view description;
    int modulus_exponent; // 1 or 2
    u64 min_prime;        // 5 or 7
    std::string_view citation;
};

// Outcome of one check at one prime. residual is the canonical residue of
// lhs - rhs; pass iff residual == 0.
struct CheckResult {
    std::string check;
    u64 prime = 0;
    u64 modulus = 0;
    u64 lhs = 0;
    u64 rhs = 0;
    u64 residual = 0;
    bool pass = false;
    u64 elapsed_ns = 0;
};

// Registry order is fixed: C1..C20.
inline const std::array<CheckDescriptor, 20>& list_checks() {
    static const std::array<CheckDescriptor, 20> regs{{
        {"wolstenholme_h1", "H(1) == 0 (mod p^2)", 2, 5, "Wolstenholme (1862)"},
        {"reflection_eq6",
         "1/(j+1) + ... + 1/(p-1) == -H_j (mod p^2) for every j = 1..p-2", 2, 5,
         "reflection form of Wolstenholme's theorem"},
        {"h2_mod_p", "H(2) == 0 (mod p)", 1, 7, "classical companion of Wolstenholme's theorem"},
        {"eq7_chain", "H(1,2,1) == -sum H_j^2/j^2 + H(1,3) + H(4) (mod p^2)", 2, 7,
         "expansion of H(1,2,1) through the reflection congruence"},
        {"eq8",
         "H(1,2,1) + H(3,1) == -sum H_j^2/j^2 (mod p^2); the sum's upper limit is "
         "read as p-1", 2, 7,
         "previous relation combined with the stuffle H(1)H(3)"},
        {"eq9", "H(1,2,1) + H(3,1) == -2H(2,1,1) - H(2,2) (mod p^2)", 2, 7,
         "stuffle H(1)H(2,1) with p^2 | H(1)"},
        {"eq10", "H(2,1,1) == (3/5) p B_{p-5} (mod p^2)", 2, 7,
         "Zhao's Wolstenholme-type theorem for multiple harmonic sums"},
        {"eq11", "H(2,2) == -(2/5) p B_{p-5} (mod p^2)", 2, 7,
         "Zhao's Wolstenholme-type theorem for multiple harmonic sums"},
        {"eq12", "H(1,2,1) + H(3,1) == -(4/5) p B_{p-5} (mod p^2)", 2, 7,
         "combination of the two preceding congruences"},
        {"shuffle_13_mod", "H(1)H(3) - H(1,3) - H(3,1) - H(4) == 0 (mod p^2)", 2, 7,
         "quasi-shuffle (stuffle) product identity"},
        {"shuffle_121_mod",
         "H(1)H(2,1) - 2H(2,1,1) - H(1,2,1) - H(3,1) - H(2,2) == 0 (mod p^2)", 2, 7,
         "quasi-shuffle (stuffle) product identity"},
        {"eq13",
         "4 sum H_{k-1}^3/k + 6 sum H_k^2/k^2 - 8 sum H_{k-1}/k^3 - 5 H(4) == 0 (mod p^2)", 2, 7,
         "telescoped binomial expansion of H_k^4 - H_{k-1}^4 plus Wolstenholme"},
        {"eq14_residue",
         "sum H_{k-1}^3/k == sum H_k^3/k - 3 sum H_k^2/k^2 + 3 sum H_{k-1}/k^3 + 2 H(4), "
         "as an in-ring identity", 2, 7,
         "binomial expansion of H_{k-1}^3 = (H_k - 1/k)^3"},
        {"eq15",
         "4 sum H_k^3/k - 6 sum H_k^2/k^2 + 4 sum H_{k-1}/k^3 + 3 H(4) == 0 (mod p^2)", 2, 7,
         "substitution of the previous identity into the telescoped sum"},
        {"eq16", "H(1,3) == -(9/10) p B_{p-5} (mod p^2)", 2, 7,
         "Zhao's Wolstenholme-type theorem for multiple harmonic sums"},
        {"eq17", "H(4) == -2 H(2,2) == (4/5) p B_{p-5} (mod p^2), both links", 2, 7,
         "stuffle H(2)^2 = 2H(2,2) + H(4) with H(2) == 0 (mod p)"},
        {"main_s1", "sum H_k^2/k^2 == (4/5) p B_{p-5} (mod p^2)", 2, 7,
         "conjectured by Z.-W. Sun"},
        {"main_s2", "sum H_k^3/k == (3/2) p B_{p-5} (mod p^2)", 2, 7,
         "companion congruence to Sun's conjecture"},
        {"main_s3", "sum H_k/k^3 == -(1/10) p B_{p-5} (mod p^2)", 2, 7,
         "companion congruence to Sun's conjecture"},
        {"con1_mod_p", "sum H_k^2/k^2 == 0 (mod p)", 1, 7, "Sun and Zhao"},
    }};
    return regs;
}

inline const CheckDescriptor& find_check(std::string_view id) {
    for (const CheckDescriptor& d : list_checks())
        if (d.id == id) return d;
    throw UnknownCheck("unknown check id: " + std::string(id));
}

// (p mod p^2) * b_lift in the mod-p^2 ring. Well defined for any lift of
// B_{p-5} mod p: p*(b + tp) == p*b (mod p^2).
inline u64 p_times_b(const ResidueRing& ring2, u64 b_lift) {
    return ring2.mul(ring2.prime() % ring2.modulus(), b_lift % ring2.modulus());
}

namespace detail {

struct CheckSides {
    u64 lhs;
    u64 rhs;
    u64 modulus;
};

// Evaluate the named check's two sides. b_lift is any lift of B_{p-5} mod p;
// checks that don't reference B ignore it.
inline CheckSides check_sides(std::string_view id, const HarmonicProfile& prof, u64 b_lift) {
    const ResidueRing& r2 = prof.ring;
    const u64 p = prof.p;
    auto coef_pb = [&](i64 num, i64 den) {
        return r2.mul(rational_residue(num, den, r2).value(), p_times_b(r2, b_lift));
    };

    if (id == "wolstenholme_h1") return {prof.P1, 0, r2.modulus()};
    if (id == "reflection_eq6")
        return {prof.reflection_ok ? 0 : prof.reflection_defect, 0, r2.modulus()};
    if (id == "h2_mod_p") return {prof.P2 % p, 0, p};
    if (id == "eq7_chain")
        return {prof.T121, r2.add(r2.sub(prof.D13, prof.S1), prof.P4), r2.modulus()};
    if (id == "eq8") return {r2.add(prof.T121, prof.D31), r2.neg(prof.S1), r2.modulus()};
    if (id == "eq9")
        return {r2.add(prof.T121, prof.D31),
                r2.neg(r2.add(r2.add(prof.T211, prof.T211), prof.D22)), r2.modulus()};
    if (id == "eq10") return {prof.T211, coef_pb(3, 5), r2.modulus()};
    if (id == "eq11") return {prof.D22, coef_pb(-2, 5), r2.modulus()};
    if (id == "eq12") return {r2.add(prof.T121, prof.D31), coef_pb(-4, 5), r2.modulus()};
    if (id == "shuffle_13_mod") {
        const u64 lhs = r2.sub(r2.sub(r2.sub(r2.mul(prof.P1, prof.P3), prof.D13), prof.D31),
                               prof.P4);
        return {lhs, 0, r2.modulus()};
    }
    if (id == "shuffle_121_mod") {
        u64 lhs = r2.mul(prof.P1, prof.D21);
        lhs = r2.sub(lhs, r2.add(prof.T211, prof.T211));
        lhs = r2.sub(lhs, prof.T121);
        lhs = r2.sub(lhs, prof.D31);
        lhs = r2.sub(lhs, prof.D22);
        return {lhs, 0, r2.modulus()};
    }
    if (id == "eq13") {
        u64 lhs = r2.mul(rational_residue(4, 1, r2).value(), prof.Tcube);
        lhs = r2.add(lhs, r2.mul(rational_residue(6, 1, r2).value(), prof.S1));
        lhs = r2.sub(lhs, r2.mul(rational_residue(8, 1, r2).value(), prof.U));
        lhs = r2.sub(lhs, r2.mul(rational_residue(5, 1, r2).value(), prof.P4));
        return {lhs, 0, r2.modulus()};
    }
    if (id == "eq14_residue") {
        u64 rhs = r2.sub(prof.S2, r2.mul(rational_residue(3, 1, r2).value(), prof.S1));
        rhs = r2.add(rhs, r2.mul(rational_residue(3, 1, r2).value(), prof.U));
        rhs = r2.add(rhs, r2.add(prof.P4, prof.P4));
        return {prof.Tcube, rhs, r2.modulus()};
    }
    if (id == "eq15") {
        u64 lhs = r2.mul(rational_residue(4, 1, r2).value(), prof.S2);
        lhs = r2.sub(lhs, r2.mul(rational_residue(6, 1, r2).value(), prof.S1));
        lhs = r2.add(lhs, r2.mul(rational_residue(4, 1, r2).value(), prof.U));
        lhs = r2.add(lhs, r2.mul(rational_residue(3, 1, r2).value(), prof.P4));
        return {lhs, 0, r2.modulus()};
    }
    if (id == "eq16") return {prof.D13, coef_pb(-9, 10), r2.modulus()};
    if (id == "eq17") {
        const u64 mid = r2.neg(r2.add(prof.D22, prof.D22)); // -2 H(2,2)
        const u64 end = coef_pb(4, 5);
        // chain: report the first failing link, or the first link when both hold
        if (prof.P4 != mid) return {prof.P4, mid, r2.modulus()};
        if (mid != end) return {mid, end, r2.modulus()};
        return {prof.P4, mid, r2.modulus()};
    }
    if (id == "main_s1") return {prof.S1, coef_pb(4, 5), r2.modulus()};
    if (id == "main_s2") return {prof.S2, coef_pb(3, 2), r2.modulus()};
    if (id == "main_s3") return {prof.S3, coef_pb(-1, 10), r2.modulus()};
    if (id == "con1_mod_p") return {prof.S1 % p, 0, p};
    throw UnknownCheck("unknown check id: " + std::string(id));
}

} // namespace detail

// Evaluate one check against a computed profile. b must be B_{p-5} mod p for
// the checks that reference it (eq10..eq12, eq16, eq17, main_*); it is
// ignored otherwise.
inline CheckResult run_check(std::string_view id, const HarmonicProfile& prof, const Residue& b) {
    const CheckDescriptor& desc = find_check(id);
    if (prof.p < desc.min_prime)
        throw PrimeTooSmall("check " + std::string(id) + " requires p >= " +
                            std::to_string(desc.min_prime));
    const auto t0 = std::chrono::steady_clock::now();
    const detail::CheckSides s = detail::check_sides(id, prof, b.value());
    const auto t1 = std::chrono::steady_clock::now();

    CheckResult res;
    res.check = std::string(id);
    res.prime = prof.p;
    res.modulus = s.modulus;
    res.lhs = s.lhs;
    res.rhs = s.rhs;
    res.residual = s.lhs >= s.rhs ? s.lhs - s.rhs : s.lhs + (s.modulus - s.rhs);
    res.pass = res.residual == 0;
    res.elapsed_ns = static_cast<u64>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    return res;
}

// All twenty checks, registry order, against an already-computed profile.
inline std::vector<CheckResult> evaluate_all(const HarmonicProfile& prof, const Residue& b) {
    std::vector<CheckResult> out;
    out.reserve(list_checks().size());
    for (const CheckDescriptor& d : list_checks())
        out.push_back(run_check(d.id, prof, b));
    return out;
}

// Compute the profile and B_{p-5} once, then evaluate the full registry.
inline std::vector<CheckResult> run_all(u64 p) {
    const HarmonicProfile prof = compute_profile(p);
    const Residue b = b_target(p);
    return evaluate_all(prof, b);
}

} // namespace harmonia
