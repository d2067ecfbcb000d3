#include "digitseed/modular.hpp"

#include <map>

namespace digitseed {
namespace {

BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& mod) {
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

bool looks_prime(const BigInt& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

BigInt pollard_rho(const BigInt& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            BigInt diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(BigInt n, std::map<BigInt, unsigned long>& out) {
    for (unsigned long p = 2; p < 100000 && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[BigInt(p)];
            n /= p;
        }
    }
    if (n == 1) return;
    if (looks_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

BigInt invert_mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::invalid_argument("value not invertible modulo " + m.get_str());
    return r;
}

BigInt repunit_mod(Base b, const BigInt& n, const BigInt& m) {
    // (b^n - 1)/(b - 1) mod m via the classic lift: reduce b^n modulo m*(b-1),
    // where the subtraction stays divisible by b-1.
    BigInt lift = m * (b.value - 1);
    BigInt x = powm(BigInt(b.value), n, lift);
    return ((x - 1) / (b.value - 1)) % m;
}

BigInt multiplicative_order(const BigInt& a, const BigInt& p) {
    if (p < 2 || !looks_prime(p)) throw std::invalid_argument("modulus must be prime");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    if (g != 1) throw std::invalid_argument("gcd(a, p) must be 1");
    BigInt phi = p - 1;
    std::map<BigInt, unsigned long> factors;
    factor_into(phi, factors);
    BigInt order = phi;
    for (const auto& [q, e] : factors) {
        for (unsigned long i = 0; i < e; ++i) {
            BigInt candidate = order / q;
            if (powm(a, candidate, p) == 1)
                order = candidate;
            else
                break;
        }
    }
    return order;
}

Period period(const BigInt& p, Base b) {
    BigInt g;
    BigInt bb(b.value);
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), bb.get_mpz_t());
    if (g != 1) throw std::invalid_argument("period requires gcd(p, base) = 1");
    BigInt ord = multiplicative_order(bb, p);
    if (repunit_mod(b, ord, p) == 0) return {p, b, ord};
    return {p, b, p * ord};
}

BigInt seed_residue_for_divisibility(const BigInt& p, Digit d, unsigned long n, Base b) {
    BigInt bb(b.value);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), bb.get_mpz_t());
    if (g != 1) throw std::invalid_argument("prime divides the base; no seed condition exists");
    if ((bb - 1) % p == 0) {
        // b = 1 (mod p): s_n = k + d*n, so the condition is k = -d*n.
        BigInt c = (-BigInt(d.value) * n) % p;
        return c < 0 ? c + p : c;
    }
    BigInt binv = invert_mod(bb, p);
    BigInt c = invert_mod(bb - 1, p) * d.value % p * ((powm(binv, BigInt(n), p) - 1 + p) % p) % p;
    return c;
}

ResidueClass seed_residue_for_divisibility(const BigInt& p, Digit d, const ResidueClass& n_class,
                                           Base b) {
    Period per = period(p, b);
    if (n_class.modulus % per.length != 0)
        throw std::invalid_argument("class modulus must be a multiple of period(p, b)");
    BigInt n = n_class.residue % per.length;
    return {p, seed_residue_for_divisibility(p, d, n.get_ui(), b)};
}

bool divides_s_n(const BigInt& p, const SequenceSpec& spec, unsigned long n) {
    if (p < 2) throw std::invalid_argument("divisor must be at least 2");
    BigInt bn = powm(BigInt(spec.base.value), BigInt(n), p);
    BigInt s = (spec.seed % p * bn + spec.digit.value * repunit_mod(spec.base, BigInt(n), p)) % p;
    return s == 0;
}

}  // namespace digitseed
