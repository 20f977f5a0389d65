#ifndef POWCOUNT_BIGINT_HPP
#define POWCOUNT_BIGINT_HPP

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace powcount {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& z) { return z.get_str(10); }

// Natural log of a positive big integer, accurate to double rounding even
// when the value itself overflows a double.
inline double log_bigint(const BigInt& z) {
    signed long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

} // namespace powcount

#endif
