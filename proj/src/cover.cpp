#include "digitseed/cover.hpp"

#include "digitseed/crt.hpp"

#include <algorithm>
#include <set>

namespace digitseed {
namespace {

bool looks_prime(const BigInt& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

std::vector<BigInt> checked_pool(const std::vector<BigInt>& pool, Base b) {
    std::set<BigInt> seen;
    std::vector<BigInt> out;
    for (const BigInt& p : pool) {
        if (!looks_prime(p)) throw std::invalid_argument("pool entry " + p.get_str() + " is not prime");
        if (gcd(p, BigInt(b.value)) != 1) continue;  // cannot cover anything; covered by last-digit rule
        if (seen.insert(p).second) out.push_back(p);
    }
    return out;
}

struct PooledPrime {
    BigInt prime;
    BigInt period;
};

std::vector<PooledPrime> pool_periods(const std::vector<BigInt>& pool, Base b) {
    std::vector<PooledPrime> out;
    out.reserve(pool.size());
    for (const BigInt& p : pool) out.push_back({p, period(p, b).length});
    return out;
}

}  // namespace

CoverCertificate verify_cover(const SequenceSpec& spec, const PrimeCover& cover) {
    if (cover.primes.empty()) throw std::invalid_argument("cover must contain at least one prime");
    if (spec.digit.value > 0 && gcd(spec.seed, BigInt(spec.digit.value)) != 1)
        throw std::invalid_argument("seed must be coprime to the digit");
    const unsigned long r = cover.primes.size();
    std::vector<CoverWitness> witnesses;
    witnesses.reserve(r);
    for (unsigned long i = 0; i < r; ++i) {
        const BigInt& p = cover.primes[i];
        if (!looks_prime(p)) throw std::invalid_argument("cover entry " + p.get_str() + " is not prime");
        if (gcd(p, BigInt(spec.base.value)) != 1)
            throw std::invalid_argument("cover prime " + p.get_str() + " divides the base");
        BigInt per = period(p, spec.base).length;
        if (BigInt(r) % per != 0)
            throw CoverVerificationError(CoverVerificationError::Kind::PeriodMismatch, i,
                                         "period " + per.get_str() + " of " + p.get_str() +
                                             " does not divide cover length " + std::to_string(r));
        unsigned long n_rep = (i == 0) ? r : i;
        BigInt s = append_digits(spec, n_rep);
        if (s % p != 0)
            throw CoverVerificationError(CoverVerificationError::Kind::RepresentativeNotDivisible, i,
                                         "representative n=" + std::to_string(n_rep) +
                                             " not divisible by " + p.get_str());
        BigInt q = s / p;
        if (q <= 1)
            throw CoverVerificationError(CoverVerificationError::Kind::DegenerateEquality, i,
                                         "s_" + std::to_string(n_rep) + " equals its covering prime");
        witnesses.push_back({n_rep, p, q});
    }
    return {spec, cover, std::move(witnesses)};
}

std::optional<PrimeCover> find_cover(const SequenceSpec& spec, const std::vector<BigInt>& pool,
                                     unsigned long max_len) {
    if (max_len < 1) throw std::invalid_argument("max_len must be positive");
    auto primes = pool_periods(checked_pool(pool, spec.base), spec.base);
    for (unsigned long r = 1; r <= max_len; ++r) {
        std::vector<BigInt> chosen(r);
        bool complete = true;
        for (unsigned long c = 0; c < r && complete; ++c) {
            unsigned long n_rep = (c == 0) ? r : c;
            BigInt s = append_digits(spec, n_rep);
            const PooledPrime* best = nullptr;
            for (const auto& pp : primes) {
                if (BigInt(r) % pp.period != 0) continue;
                if (s == pp.prime || s % pp.prime != 0) continue;
                if (best == nullptr || pp.period < best->period ||
                    (pp.period == best->period && pp.prime < best->prime))
                    best = &pp;
            }
            if (best == nullptr)
                complete = false;
            else
                chosen[c] = best->prime;
        }
        if (complete) {
            PrimeCover cover{std::move(chosen)};
            verify_cover(spec, cover);
            return cover;
        }
    }
    return std::nullopt;
}

CongruenceSystem cover_conditions(const std::vector<ClassAssignment>& assignment, Digit d, Base b) {
    std::vector<ResidueClass> conditions;
    for (const auto& entry : assignment) {
        ResidueClass cond = seed_residue_for_divisibility(entry.prime, d, entry.n_class, b);
        bool merged = false;
        for (const auto& existing : conditions) {
            if (existing.modulus != cond.modulus) continue;
            if (existing.residue != cond.residue)
                throw std::invalid_argument("prime " + entry.prime.get_str() +
                                            " forced to two different residues");
            merged = true;
            break;
        }
        if (!merged) conditions.push_back(std::move(cond));
    }
    return {std::move(conditions)};
}

namespace {

// Backtracking state for the coherent search. Candidates per class are
// ranked by period + residue (smaller first), larger prime on ties; a class
// coverable by an already-forced pair takes it and explores no alternative,
// since reuse adds no constraint.
struct CoherentSearch {
    Base base;
    std::vector<Digit> digits;
    std::vector<PooledPrime> pool;
    std::set<BigInt> digit_divisors;  // pool primes dividing some digit
    std::map<BigInt, BigInt> forced;  // prime -> seed residue
    unsigned long max_len;

    struct Candidate {
        BigInt score;
        BigInt prime;
        BigInt residue;
    };

    bool admissible(const BigInt& p, const BigInt& rho) const {
        return !(rho == 0 && digit_divisors.count(p));
    }

    // Fills `fresh` with new-commitment candidates, best first. Returns true
    // when the class is coverable by an already-forced pair.
    bool class_candidates(Digit d, unsigned long c, unsigned long r,
                          std::vector<Candidate>& fresh) const {
        bool reusable = false;
        fresh.clear();
        for (const auto& pp : pool) {
            if (BigInt(r) % pp.period != 0) continue;
            BigInt n = BigInt(c) % pp.period;
            BigInt rho = seed_residue_for_divisibility(pp.prime, d, n.get_ui(), base);
            if (!admissible(pp.prime, rho)) continue;
            auto it = forced.find(pp.prime);
            if (it != forced.end()) {
                if (it->second == rho) reusable = true;
            } else {
                fresh.push_back({pp.period + rho, pp.prime, rho});
            }
        }
        std::sort(fresh.begin(), fresh.end(), [](const Candidate& a, const Candidate& b) {
            if (a.score != b.score) return a.score < b.score;
            return a.prime > b.prime;
        });
        return reusable;
    }

    bool cover_classes(std::size_t digit_index, unsigned long r, unsigned long c) {
        if (c == r) return solve_digit(digit_index + 1);
        Digit d = digits[digit_index];
        std::vector<Candidate> fresh;
        if (class_candidates(d, c, r, fresh)) return cover_classes(digit_index, r, c + 1);
        for (const auto& cand : fresh) {
            forced.emplace(cand.prime, cand.residue);
            if (cover_classes(digit_index, r, c + 1)) return true;
            forced.erase(cand.prime);
        }
        return false;
    }

    bool solve_digit(std::size_t digit_index) {
        if (digit_index == digits.size()) return true;
        for (unsigned long r = 2; r <= max_len; r += 2)
            if (cover_classes(digit_index, r, 0)) return true;
        return false;
    }
};

}  // namespace

std::optional<CoherentCovers> find_coherent_covers(const std::vector<Digit>& digits,
                                                   const std::vector<BigInt>& pool,
                                                   unsigned long max_len) {
    if (digits.empty()) throw std::invalid_argument("at least one digit is required");
    CoherentSearch search;
    search.base = Base{};
    search.max_len = max_len;
    search.digits = digits;
    std::sort(search.digits.begin(), search.digits.end(),
              [](Digit a, Digit b) { return a.value < b.value; });
    for (Digit d : search.digits)
        if (d.value != 1 && d.value != 3 && d.value != 7 && d.value != 9)
            throw std::invalid_argument("coherent covers are searched for digits 1, 3, 7, 9 only");
    search.pool = pool_periods(checked_pool(pool, search.base), search.base);
    std::sort(search.pool.begin(), search.pool.end(),
              [](const PooledPrime& a, const PooledPrime& b) { return a.prime < b.prime; });
    for (const auto& pp : search.pool)
        for (Digit d : search.digits)
            if (d.value > 0 && BigInt(d.value) % pp.prime == 0) search.digit_divisors.insert(pp.prime);

    if (!search.solve_digit(0)) return std::nullopt;

    CongruenceSystem system;
    for (const auto& [p, rho] : search.forced) system.conditions.push_back({p, rho});

    // A member of the family with every gcd(k, digit) = 1; reuse preferences
    // guarantee one exists within a few steps of the residue.
    ProgressionFamily family = crt_combine(system);
    BigInt member = family.residue == 0 ? family.modulus : family.residue;
    std::vector<BigInt> forced_primes;
    for (const auto& [p, rho] : search.forced) forced_primes.push_back(p);
    for (int hop = 0; hop < 1000; ++hop) {
        bool ok = member > 0;
        for (Digit d : search.digits)
            if (d.value > 0 && gcd(member, BigInt(d.value)) != 1) ok = false;
        if (ok) break;
        member += family.modulus;
    }

    CoherentCovers result;
    result.system = std::move(system);
    for (Digit d : search.digits) {
        auto cover = find_cover(SequenceSpec(member, d, search.base), forced_primes, max_len);
        if (!cover) return std::nullopt;  // cannot happen for a consistent system
        result.covers.emplace(d.value, std::move(*cover));
    }
    return result;
}

std::vector<BigInt> default_prime_pool(Base b) {
    std::vector<BigInt> pool;
    for (unsigned long p = 3; p < 300; ++p) {
        BigInt bp(p);
        if (!looks_prime(bp)) continue;
        if (gcd(bp, BigInt(b.value)) != 1) continue;
        if (BigInt(120) % period(bp, b).length == 0) pool.push_back(bp);
    }
    return pool;
}

}  // namespace digitseed
