#include "digitseed/sequence.hpp"

namespace digitseed {

BigInt append_digits(const SequenceSpec& spec, unsigned long n) {
    BigInt bn;
    mpz_ui_pow_ui(bn.get_mpz_t(), spec.base.value, n);
    BigInt rep = (bn - 1) / (spec.base.value - 1);
    return spec.seed * bn + spec.digit.value * rep;
}

BigInt repunit(Base b, unsigned long t) {
    BigInt bt;
    mpz_ui_pow_ui(bt.get_mpz_t(), b.value, t);
    return (bt - 1) / (b.value - 1);
}

std::pair<BigInt, BigInt> square_base_repunit_factors(unsigned long m, unsigned long t) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("m must be odd and at least 3");
    if (t < 3 || t % 2 == 0) throw std::invalid_argument("t must be odd and at least 3");
    BigInt mt;
    mpz_ui_pow_ui(mt.get_mpz_t(), m, t);
    return {(mt - 1) / (m - 1), (mt + 1) / (m + 1)};
}

}  // namespace digitseed
