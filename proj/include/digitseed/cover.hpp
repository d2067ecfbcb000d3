#pragma once

#include "digitseed/modular.hpp"

#include <map>
#include <optional>
#include <vector>

namespace digitseed {

/// Residue-indexed list of primes: primes[n mod r] divides s_n for n >= 1.
/// Primes may repeat; the list length is the cover length r.
struct PrimeCover {
    std::vector<BigInt> primes;

    std::size_t length() const { return primes.size(); }
    friend bool operator==(const PrimeCover&, const PrimeCover&) = default;
};

/// One checked representative per residue class: the smallest n >= 1 in the
/// class, with the exact quotient s_n / p.
struct CoverWitness {
    unsigned long n = 0;
    BigInt prime;
    BigInt quotient;
};

/// Machine-checkable record that a cover was verified for a spec. Each
/// witness satisfies prime * quotient == s_n with quotient > 1, and every
/// prime's period divides the cover length.
struct CoverCertificate {
    SequenceSpec spec;
    PrimeCover cover;
    std::vector<CoverWitness> witnesses;
};

class CoverVerificationError : public std::runtime_error {
public:
    enum class Kind { PeriodMismatch, RepresentativeNotDivisible, DegenerateEquality };

    CoverVerificationError(Kind k, std::size_t index, const std::string& what)
        : std::runtime_error(what), kind(k), class_index(index) {}

    Kind kind;
    std::size_t class_index;
};

/// Conditions on the seed, one residue class per modulus.
struct CongruenceSystem {
    std::vector<ResidueClass> conditions;
};

/// A residue class of appended-digit counts assigned to a covering prime.
struct ClassAssignment {
    ResidueClass n_class;
    BigInt prime;
};

/// Covers for several digits that share one consistent set of seed
/// conditions (a single residue per prime across all digits).
struct CoherentCovers {
    std::map<unsigned long, PrimeCover> covers;  // keyed by digit value
    CongruenceSystem system;
};

/// Checks that `cover` really covers spec: every period divides the length,
/// the smallest representative n >= 1 of each class is divisible by its
/// prime, and no early term equals its covering prime. Throws
/// CoverVerificationError otherwise.
CoverCertificate verify_cover(const SequenceSpec& spec, const PrimeCover& cover);

/// Smallest-length cover for spec drawn from `pool`, lengths tried up to
/// max_len; per class the prime with the smallest period wins, value as the
/// tie-break. The result is verified before being returned.
std::optional<PrimeCover> find_cover(const SequenceSpec& spec, const std::vector<BigInt>& pool,
                                     unsigned long max_len);

/// Seed conditions induced by an assignment of n-classes to primes for one
/// digit. Duplicate (prime, class) pairs merge; one prime forced to two
/// different residues is rejected.
CongruenceSystem cover_conditions(const std::vector<ClassAssignment>& assignment, Digit d,
                                  Base b = Base{});

/// Searches for one cover per digit whose combined seed conditions are
/// mutually consistent. Deterministic backtracking: per class, candidate
/// (prime, residue) pairs are scored by period plus residue with the larger
/// prime breaking ties, and already-forced pairs are always preferred.
std::optional<CoherentCovers> find_coherent_covers(const std::vector<Digit>& digits,
                                                   const std::vector<BigInt>& pool,
                                                   unsigned long max_len);

/// Primes below 300, coprime to the base, whose period divides 120.
std::vector<BigInt> default_prime_pool(Base b = Base{});

}  // namespace digitseed
