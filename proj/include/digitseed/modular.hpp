#pragma once

#include "digitseed/sequence.hpp"

#include <vector>

namespace digitseed {

/// A residue class: residue (mod modulus), kept normalized to 0 <= residue < modulus.
struct ResidueClass {
    BigInt modulus;
    BigInt residue;

    ResidueClass(BigInt m, BigInt r) : modulus(std::move(m)), residue(std::move(r)) {
        if (modulus <= 0) throw std::invalid_argument("modulus must be positive");
        mpz_mod(residue.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t());
    }

    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

/// Period of a prime p with respect to the digit-append sequences in base b:
/// the smallest r > 0 with b^r = 1 (mod p) and repunit(b, r) = 0 (mod p),
/// so that s_{n+r} = s_n (mod p) for every seed and digit.
struct Period {
    BigInt prime;
    Base base;
    BigInt length;
};

/// Smallest r > 0 with a^r = 1 (mod p), found by divisor-of-(p-1) search.
/// Requires p prime and gcd(a, p) = 1.
BigInt multiplicative_order(const BigInt& a, const BigInt& p);

/// Unified period; equals multiplicative_order(b, p) unless p divides b - 1,
/// in which case it is p. Requires gcd(p, b) = 1.
Period period(const BigInt& p, Base b = Base{});

/// The unique class c (mod p) such that p divides s_n for every n in n_class
/// exactly when the seed is congruent to c. The class on n is reduced modulo
/// period(p, b) internally; its modulus must be a multiple of the period.
ResidueClass seed_residue_for_divisibility(const BigInt& p, Digit d, const ResidueClass& n_class,
                                           Base b = Base{});

/// Same, with the class on n given by a plain representative.
BigInt seed_residue_for_divisibility(const BigInt& p, Digit d, unsigned long n, Base b = Base{});

/// True iff p divides s_n, computed by modular exponentiation without
/// materializing s_n. Valid for any p >= 2, including divisors of the base.
bool divides_s_n(const BigInt& p, const SequenceSpec& spec, unsigned long n);

/// repunit(b, n) mod m, for any m >= 1 coprime checks aside.
BigInt repunit_mod(Base b, const BigInt& n, const BigInt& m);

/// Modular inverse; throws std::invalid_argument when gcd(a, m) != 1.
BigInt invert_mod(const BigInt& a, const BigInt& m);

}  // namespace digitseed
