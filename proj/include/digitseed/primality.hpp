#pragma once

#include "digitseed/sequence.hpp"

#include <optional>
#include <vector>

namespace digitseed {

enum class VerdictKind { Composite, ProbablePrime, ProvenPrime };

/// Outcome of a primality check. Composite verdicts always carry a
/// re-checkable witness: either an explicit factor or a strong-test base.
struct PrimalityVerdict {
    VerdictKind kind = VerdictKind::Composite;
    std::optional<BigInt> factor;        // composite: a divisor, when one was found
    std::optional<BigInt> witness_base;  // composite: base of a failed strong test
    int rounds = 0;                      // probable-prime: number of strong tests passed
    std::string certificate;             // proven-prime: "trial-division" or "lucas-n-plus-1"

    bool is_prime_or_probable() const { return kind != VerdictKind::Composite; }
};

/// The primes below 10^4 used for trial division, in increasing order.
const std::vector<unsigned long>& small_primes();

/// Trial division by primes below 10^4, then `rounds` strong pseudoprime
/// (Miller-Rabin) tests with the first `rounds` primes as bases. Numbers
/// below 10^8 that survive trial division are proven prime outright.
PrimalityVerdict is_probable_prime(const BigInt& n, int rounds = 20);

/// Lucas N+1 primality proof from a complete factorization of N+1.
/// Returns proven-prime when a Lucas sequence certifies N, composite when a
/// factor or failed test shows up, and probable-prime when no certifying
/// sequence was found within the attempt budget.
PrimalityVerdict lucas_n_plus_one_prove(const BigInt& n,
                                        const std::vector<std::pair<BigInt, unsigned long>>& n_plus_one_factors);

}  // namespace digitseed
