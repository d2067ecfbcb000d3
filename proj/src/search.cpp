#include "digitseed/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace digitseed {
namespace {

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Rolling scan over s_1..s_n_max. Maintains the term and its residues
// modulo every trial prime incrementally; calls sink(n, witness) per
// composite term and returns the first n whose term is (probably) prime,
// along with whether that primality is proven.
struct PrimeScanResult {
    std::optional<unsigned long> prime_at;
    bool proven = false;
};

PrimeScanResult scan_terms(const SequenceSpec& spec, unsigned long n_max, int rounds,
                           const std::function<void(unsigned long, const CompositenessWitness&)>& sink) {
    const auto& primes = small_primes();
    const unsigned long b = spec.base.value;
    const unsigned long d = spec.digit.value;
    std::vector<unsigned long> residue(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i)
        residue[i] = mpz_fdiv_ui(spec.seed.get_mpz_t(), primes[i]);
    BigInt s = spec.seed;
    for (unsigned long n = 1; n <= n_max; ++n) {
        s = s * b + d;
        for (std::size_t i = 0; i < primes.size(); ++i)
            residue[i] = (residue[i] * b + d) % primes[i];
        std::optional<BigInt> factor;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (residue[i] == 0 && s != primes[i]) {
                factor = BigInt(primes[i]);
                break;
            }
        }
        if (factor) {
            if (sink) sink(n, {CompositenessWitness::Kind::SmallFactor, *factor});
            continue;
        }
        PrimalityVerdict verdict = is_probable_prime(s, rounds);
        if (verdict.kind == VerdictKind::Composite) {
            CompositenessWitness w;
            if (verdict.factor) {
                w.kind = CompositenessWitness::Kind::SmallFactor;
                w.value = *verdict.factor;
            } else {
                w.kind = CompositenessWitness::Kind::StrongBase;
                w.value = *verdict.witness_base;
            }
            if (sink) sink(n, w);
            continue;
        }
        return {n, verdict.kind == VerdictKind::ProvenPrime};
    }
    return {};
}

void require_scannable(const SequenceSpec& spec) {
    if (spec.digit.value == 0)
        throw std::invalid_argument("digit 0 has no seed question; every term is k*b^n");
    if (gcd(spec.seed, BigInt(spec.digit.value)) != 1)
        throw std::invalid_argument("seed must be coprime to the digit");
}

}  // namespace

std::optional<BigInt> trivial_factor(const BigInt& k, Digit d, Base b) {
    BigInt g = gcd(BigInt(d.value), k * b.value);  // gcd(0, x) = x handles d = 0
    if (g == 1) return std::nullopt;
    BigInt f = 0;
    for (unsigned long p : small_primes()) {
        if (mpz_divisible_ui_p(g.get_mpz_t(), p)) {
            f = p;
            break;
        }
    }
    if (f == 0) {
        if (is_probable_prime(g, 20).is_prime_or_probable())
            f = g;
        else
            return std::nullopt;
    }
    if (k * b.value + d.value <= f) return std::nullopt;  // s_1 would equal the factor
    return f;
}

ScanReport verify_seed_bounded(const SequenceSpec& spec, unsigned long n_max, int rounds) {
    require_scannable(spec);
    ScanReport report;
    report.n_max = n_max;
    report.rounds = rounds;
    report.witnesses.reserve(n_max);
    auto result = scan_terms(spec, n_max, rounds, [&](unsigned long n, const CompositenessWitness& w) {
        report.witnesses.push_back({n, w});
    });
    if (result.prime_at)
        throw SeedDisproved(*result.prime_at, result.proven, rounds,
                            "s_" + std::to_string(*result.prime_at) + " is " +
                                (result.proven ? "prime" : "a probable prime"));
    return report;
}

std::vector<BigInt> EliminationReport::survivors() const {
    std::vector<BigInt> out;
    for (const auto& rec : records)
        if (rec.status == CandidateStatus::Survivor) out.push_back(rec.k);
    return out;
}

EliminationReport eliminate_below(const BigInt& k_limit, Digit d, Base b, unsigned long n_max,
                                  const EliminationOptions& options) {
    if (k_limit < 2) throw std::invalid_argument("k_limit must be at least 2");
    if (d.value == 0 || d.value >= b.value)
        throw std::invalid_argument("digit must satisfy 1 <= d < base");
    EliminationReport report;
    report.digit = d;
    report.base = b;
    report.k_limit = k_limit;
    report.n_max = n_max;
    report.rounds = options.rounds;

    std::vector<BigInt> candidates;
    for (BigInt k = 1; k < k_limit; ++k) {
        if (gcd(k, BigInt(d.value)) != 1) continue;
        if (trivial_factor(k, d, b)) continue;  // composite for every n by a shared factor
        candidates.push_back(k);
    }
    report.records.resize(candidates.size());

    std::vector<BigInt> pool = default_prime_pool(b);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= candidates.size()) return;
            const BigInt& k = candidates[idx];
            SequenceSpec spec(k, d, b);
            CandidateRecord rec;
            rec.k = k;
            rec.rounds = options.rounds;
            if (auto cover = find_cover(spec, pool, options.cover_max_len)) {
                rec.status = CandidateStatus::Covered;
                rec.cover = std::move(*cover);
            } else {
                auto result = scan_terms(spec, n_max, options.rounds, nullptr);
                if (result.prime_at) {
                    rec.status = CandidateStatus::Eliminated;
                    rec.n = *result.prime_at;
                    rec.proven = result.proven;
                } else {
                    rec.status = CandidateStatus::Survivor;
                    rec.n = n_max;
                }
            }
            report.records[idx] = std::move(rec);
            std::size_t d_now = done.fetch_add(1) + 1;
            if (options.progress) options.progress(d_now, candidates.size());
        }
    };
    unsigned int jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (unsigned int i = 0; i < jobs; ++i) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    return report;
}

AllDigitReport all_digit_seed_check(const BigInt& k, unsigned long n_max, int rounds,
                                    unsigned long cover_max_len) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    AllDigitReport report;
    report.k = k;
    report.n_max = n_max;
    report.passed = true;
    std::vector<BigInt> pool = default_prime_pool();
    for (unsigned long dv = 0; dv <= 9; ++dv) {
        Digit d{dv};
        DigitOutcome outcome;
        outcome.digit = d;
        if (auto f = trivial_factor(k, d)) {
            outcome.kind = DigitOutcome::Kind::TrivialFactor;
            outcome.factor = *f;
        } else if (auto cover = find_cover(SequenceSpec(k, d), pool, cover_max_len)) {
            outcome.kind = DigitOutcome::Kind::Covered;
            outcome.cover = verify_cover(SequenceSpec(k, d), *cover);
        } else {
            auto result = scan_terms(SequenceSpec(k, d), n_max, rounds, nullptr);
            if (result.prime_at) {
                outcome.kind = DigitOutcome::Kind::Failed;
                outcome.n = *result.prime_at;
                outcome.proven = result.proven;
                report.passed = false;
            } else {
                outcome.kind = DigitOutcome::Kind::Scanned;
                outcome.n = n_max;
            }
        }
        report.outcomes.push_back(std::move(outcome));
    }
    return report;
}

PandigitalReport pandigital_verify(const BigInt& k, const std::vector<BigInt>& pool,
                                   unsigned long max_len) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    PandigitalReport report;
    report.k = k;
    for (unsigned long dv : {1ul, 3ul, 7ul, 9ul}) {
        report.digit_gcds[dv] = gcd(k, BigInt(dv));
        if (report.digit_gcds[dv] != 1) {
            report.missing.push_back(dv);
            continue;
        }
        SequenceSpec spec(k, Digit{dv});
        if (auto cover = find_cover(spec, pool, max_len))
            report.certificates.emplace(dv, verify_cover(spec, *cover));
        else
            report.missing.push_back(dv);
    }
    return report;
}

PandigitalReport pandigital_verify(const BigInt& k) {
    return pandigital_verify(k, default_prime_pool());
}

ProgressionFamily pandigital_family(const std::vector<BigInt>& pool, unsigned long max_len) {
    auto coherent = find_coherent_covers({Digit{1}, Digit{3}, Digit{7}, Digit{9}}, pool, max_len);
    if (!coherent)
        throw std::runtime_error("no coherent cover for digits 1, 3, 7, 9 within the pool");
    CongruenceSystem system = coherent->system;
    system.conditions.push_back({BigInt(10), BigInt(1)});
    return crt_combine(system);
}

ProgressionFamily pandigital_family() {
    return pandigital_family(default_prime_pool());
}

}  // namespace digitseed
