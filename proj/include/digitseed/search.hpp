#pragma once

#include "digitseed/cover.hpp"
#include "digitseed/crt.hpp"
#include "digitseed/primality.hpp"

#include <functional>
#include <map>
#include <optional>

namespace digitseed {

/// Why one term s_n is composite.
struct CompositenessWitness {
    enum class Kind { SmallFactor, StrongBase };
    Kind kind = Kind::SmallFactor;
    BigInt value;  // the factor, or the strong-test base
};

struct ScanRecord {
    unsigned long n = 0;
    CompositenessWitness witness;
};

/// Outcome of scanning s_1 .. s_{n_max}: every term composite, with a
/// witness recorded per term.
struct ScanReport {
    unsigned long n_max = 0;
    int rounds = 0;
    std::vector<ScanRecord> witnesses;
};

/// Thrown when a bounded scan meets a (probable) prime, disproving the seed
/// candidacy of the spec up to the testing strength used.
class SeedDisproved : public std::runtime_error {
public:
    SeedDisproved(unsigned long n_at, bool is_proven, int rounds_used, const std::string& what)
        : std::runtime_error(what), n(n_at), proven(is_proven), rounds(rounds_used) {}

    unsigned long n;
    bool proven;  // proven prime (small) rather than probable prime
    int rounds;
};

/// Scans n = 1..n_max recording a compositeness witness per term; throws
/// SeedDisproved at the first (probable) prime.
ScanReport verify_seed_bounded(const SequenceSpec& spec, unsigned long n_max, int rounds = 20);

enum class CandidateStatus { Eliminated, Covered, Survivor };

struct CandidateRecord {
    BigInt k;
    CandidateStatus status = CandidateStatus::Survivor;
    unsigned long n = 0;  // eliminated: smallest n yielding a (probable) prime
    bool proven = false;  // eliminated: prime proven rather than probable
    int rounds = 0;
    std::optional<PrimeCover> cover;
};

struct EliminationReport {
    Digit digit;
    Base base;
    BigInt k_limit;
    unsigned long n_max = 0;
    int rounds = 0;
    std::vector<CandidateRecord> records;

    std::vector<BigInt> survivors() const;
};

struct EliminationOptions {
    int rounds = 20;
    unsigned long cover_max_len = 6;
    unsigned int jobs = 1;
    std::function<void(std::size_t done, std::size_t total)> progress;
};

/// Candidate elimination below k_limit: candidates coprime to the digit are
/// marked covered when a cover is found, otherwise scanned for a (probable)
/// prime among s_1..s_{n_max}. Candidate-level parallelism; the report is a
/// deterministic function of the inputs.
EliminationReport eliminate_below(const BigInt& k_limit, Digit d, Base b, unsigned long n_max,
                                  const EliminationOptions& options = {});

/// Establishes that appending a positive number of any decimal digit to k
/// yields a composite: by a shared factor, by a prime cover, or by a bounded
/// composite scan.
struct DigitOutcome {
    enum class Kind { TrivialFactor, Covered, Scanned, Failed };
    Digit digit;
    Kind kind = Kind::Scanned;
    BigInt factor;                          // TrivialFactor
    std::optional<CoverCertificate> cover;  // Covered
    unsigned long n = 0;                    // Scanned: depth; Failed: prime position
    bool proven = false;                    // Failed: prime proven rather than probable
};

struct AllDigitReport {
    BigInt k;
    unsigned long n_max = 0;
    std::vector<DigitOutcome> outcomes;
    bool passed = false;
};

AllDigitReport all_digit_seed_check(const BigInt& k, unsigned long n_max, int rounds = 20,
                                    unsigned long cover_max_len = 6);

/// Verified covers for digits 1, 3, 7, 9, when they exist in the pool.
struct PandigitalReport {
    BigInt k;
    std::map<unsigned long, CoverCertificate> certificates;
    std::vector<unsigned long> missing;       // digits with no cover found
    std::map<unsigned long, BigInt> digit_gcds;  // gcd(k, d) per digit

    bool complete() const { return missing.empty(); }
};

PandigitalReport pandigital_verify(const BigInt& k, const std::vector<BigInt>& pool,
                                   unsigned long max_len = 30);
PandigitalReport pandigital_verify(const BigInt& k);

/// Coherent covers for all four digits from the pool, plus the k = 1 (mod 10)
/// condition, combined into one progression of pandigital seeds.
ProgressionFamily pandigital_family(const std::vector<BigInt>& pool, unsigned long max_len = 30);
ProgressionFamily pandigital_family();

/// A prime that divides every s_n (n >= 1) for (k, d, b) regardless of the
/// period machinery: a prime dividing d and either k or b. Requires s_1 to
/// exceed the factor so divisibility gives compositeness.
std::optional<BigInt> trivial_factor(const BigInt& k, Digit d, Base b = Base{});

}  // namespace digitseed
