#include "digitseed/crt.hpp"

namespace digitseed {
namespace {

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace

ProgressionFamily crt_combine(const CongruenceSystem& system) {
    if (system.conditions.empty()) throw std::invalid_argument("congruence system is empty");
    BigInt residue = 0, modulus = 1;
    for (std::size_t i = 0; i < system.conditions.size(); ++i) {
        const ResidueClass& cond = system.conditions[i];
        BigInt g = gcd(modulus, cond.modulus);
        if ((cond.residue - residue) % g != 0) {
            // Pairwise consistency implies global consistency, so a conflict
            // always has a pairwise witness among the earlier conditions.
            for (std::size_t j = 0; j < i; ++j) {
                const ResidueClass& prev = system.conditions[j];
                BigInt gij = gcd(prev.modulus, cond.modulus);
                if ((cond.residue - prev.residue) % gij != 0)
                    throw CrtConflictError(prev, cond,
                                           "incompatible conditions: " + prev.residue.get_str() +
                                               " (mod " + prev.modulus.get_str() + ") vs " +
                                               cond.residue.get_str() + " (mod " +
                                               cond.modulus.get_str() + ")");
            }
            throw CrtConflictError({modulus, residue}, cond, "incompatible condition");
        }
        BigInt step = cond.modulus / g;
        BigInt t = ((cond.residue - residue) / g) % step * invert_mod(modulus / g % step, step) % step;
        if (t < 0) t += step;
        residue += modulus * t;
        modulus *= step;
        residue %= modulus;
    }
    return {residue, modulus};
}

BigInt smallest_member(const ProgressionFamily& family, const std::optional<BigInt>& coprime_to) {
    if (family.modulus <= 0 || family.residue < 0 || family.residue >= family.modulus)
        throw std::invalid_argument("family must carry a normalized residue");
    BigInt member = family.residue == 0 ? family.modulus : family.residue;
    constexpr int kScanBound = 4096;
    for (int i = 0; i < kScanBound; ++i) {
        if (!coprime_to || gcd(member, *coprime_to) == 1) return member;
        member += family.modulus;
    }
    throw std::runtime_error("no member satisfying the side condition within the scan bound");
}

}  // namespace digitseed
