#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace digitseed {

using BigInt = mpz_class;

/// Radix of the positional system, 2 or larger. Defaults to ten.
struct Base {
    unsigned long value = 10;

    Base() = default;
    explicit Base(unsigned long v) : value(v) {
        if (v < 2) throw std::invalid_argument("base must be at least 2");
    }

    friend bool operator==(Base, Base) = default;
};

/// A single digit in some ambient base. Validated against the base by
/// SequenceSpec; 0 <= value < base.value must hold wherever both appear.
struct Digit {
    unsigned long value = 0;

    Digit() = default;
    explicit Digit(unsigned long v) : value(v) {}

    friend bool operator==(Digit, Digit) = default;
};

/// The family s_n obtained by appending n copies of `digit` to `seed`,
/// written in `base`. s_0 is the seed itself.
struct SequenceSpec {
    BigInt seed;
    Digit digit;
    Base base{};

    SequenceSpec(BigInt k, Digit d, Base b = Base{}) : seed(std::move(k)), digit(d), base(b) {
        if (seed < 0) throw std::invalid_argument("seed must be nonnegative");
        if (digit.value >= base.value) throw std::invalid_argument("digit must be smaller than base");
    }
};

/// s_n = seed * base^n + digit * (base^n - 1) / (base - 1).
/// Equivalently: the seed with n copies of the digit appended.
BigInt append_digits(const SequenceSpec& spec, unsigned long n);

/// (base^t - 1) / (base - 1): the base-`b` number made of t ones.
BigInt repunit(Base b, unsigned long t);

/// For odd m >= 3 and odd t >= 3, splits the base-m^2 repunit of length t
/// into the two integer factors ((m^t - 1)/(m - 1), (m^t + 1)/(m + 1)).
/// Both factors exceed 1, so the repunit is composite.
std::pair<BigInt, BigInt> square_base_repunit_factors(unsigned long m, unsigned long t);

}  // namespace digitseed
