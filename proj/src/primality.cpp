#include "digitseed/primality.hpp"

namespace digitseed {
namespace {

constexpr unsigned long kTrialBound = 10000;  // trial division by primes below this

std::vector<unsigned long> sieve_upto(unsigned long limit) {
    std::vector<bool> composite(limit, false);
    std::vector<unsigned long> primes;
    for (unsigned long i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (unsigned long j = i * i; j < limit; j += i) composite[j] = true;
    }
    return primes;
}

BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& mod) {
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

// One strong pseudoprime round. n odd, n - 1 = d * 2^s. Returns false if the
// base witnesses compositeness.
bool strong_test(const BigInt& n, const BigInt& d, unsigned long s, const BigInt& base) {
    BigInt x = powm(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

struct LucasPair {
    BigInt u, v;
};

// (U_m, V_m) mod n for the sequence with parameters (P, Q=1), D = P^2 - 4.
LucasPair lucas_uv(const BigInt& m, const BigInt& p_param, const BigInt& d_param, const BigInt& n) {
    BigInt inv2 = (n + 1) / 2;  // n odd
    BigInt u = 1, v = p_param;
    unsigned long bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    for (long i = static_cast<long>(bits) - 2; i >= 0; --i) {
        BigInt u2 = u * v % n;
        BigInt v2 = (v * v - 2) % n;
        if (mpz_tstbit(m.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
            BigInt u_next = (p_param * u2 + v2) % n * inv2 % n;
            BigInt v_next = (d_param * u2 + p_param * v2) % n * inv2 % n;
            u = u_next;
            v = v_next;
        } else {
            u = u2;
            v = v2;
        }
        if (u < 0) u += n;
        if (v < 0) v += n;
    }
    return {u, v};
}

}  // namespace

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = sieve_upto(kTrialBound);
    return primes;
}

PrimalityVerdict is_probable_prime(const BigInt& n, int rounds) {
    if (n < 2) throw std::invalid_argument("primality test requires n >= 2");
    if (rounds < 1) throw std::invalid_argument("rounds must be positive");
    for (unsigned long p : small_primes()) {
        if (n == p) return {VerdictKind::ProvenPrime, {}, {}, 0, "trial-division"};
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return {VerdictKind::Composite, BigInt(p), {}, 0, {}};
    }
    if (n < BigInt(kTrialBound) * kTrialBound)
        return {VerdictKind::ProvenPrime, {}, {}, 0, "trial-division"};

    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    BigInt base = 0;
    for (int i = 0; i < rounds; ++i) {
        if (static_cast<std::size_t>(i) < small_primes().size())
            base = small_primes()[static_cast<std::size_t>(i)];
        else
            mpz_nextprime(base.get_mpz_t(), base.get_mpz_t());
        if (!strong_test(n, d, s, base))
            return {VerdictKind::Composite, {}, base, i, {}};
    }
    return {VerdictKind::ProbablePrime, {}, {}, rounds, {}};
}

PrimalityVerdict lucas_n_plus_one_prove(const BigInt& n,
                                        const std::vector<std::pair<BigInt, unsigned long>>& n_plus_one_factors) {
    if (n < 2) throw std::invalid_argument("primality test requires n >= 2");
    BigInt product = 1;
    for (const auto& [q, e] : n_plus_one_factors) {
        if (q < 2 || !is_probable_prime(q, 20).is_prime_or_probable())
            throw std::invalid_argument("factor " + q.get_str() + " of n+1 is not prime");
        for (unsigned long i = 0; i < e; ++i) product *= q;
    }
    if (product != n + 1) throw std::invalid_argument("factorization does not multiply to n+1");

    for (unsigned long p : small_primes()) {
        if (n == p) return {VerdictKind::ProvenPrime, {}, {}, 0, "trial-division"};
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return {VerdictKind::Composite, BigInt(p), {}, 0, {}};
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        BigInt root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        return {VerdictKind::Composite, root, {}, 0, {}};
    }

    // For each prime q | n+1 find a Lucas sequence (P, Q=1), D = P^2 - 4 with
    // (D/n) = -1, n | U_{n+1} and gcd(U_{(n+1)/q}, n) = 1. Sequences may
    // differ between the q.
    for (const auto& [q, e] : n_plus_one_factors) {
        (void)e;
        bool certified = false;
        for (unsigned long p_try = 3; p_try < 3 + 40; ++p_try) {
            BigInt p_param(p_try);
            BigInt d_param = p_param * p_param - 4;
            BigInt g;
            mpz_gcd(g.get_mpz_t(), d_param.get_mpz_t(), n.get_mpz_t());
            if (g == n) continue;
            if (g != 1) return {VerdictKind::Composite, g, {}, 0, {}};
            int jac = mpz_jacobi(d_param.get_mpz_t(), n.get_mpz_t());
            if (jac != -1) continue;
            if (lucas_uv(n + 1, p_param, d_param, n).u != 0)
                return {VerdictKind::Composite, {}, p_param, 0, {}};  // prime would satisfy U_{n+1} = 0
            BigInt u_part = lucas_uv((n + 1) / q, p_param, d_param, n).u;
            mpz_gcd(g.get_mpz_t(), u_part.get_mpz_t(), n.get_mpz_t());
            if (g == 1) {
                certified = true;
                break;
            }
            if (g != n) return {VerdictKind::Composite, g, {}, 0, {}};
        }
        if (!certified) {
            // No certifying sequence found; fall back to probable-prime status.
            PrimalityVerdict mr = is_probable_prime(n, 20);
            return mr.kind == VerdictKind::Composite ? mr
                                                     : PrimalityVerdict{VerdictKind::ProbablePrime, {}, {}, 20, {}};
        }
    }
    return {VerdictKind::ProvenPrime, {}, {}, 0, "lucas-n-plus-1"};
}

}  // namespace digitseed
