#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "ifsdyn/rational.hpp"

namespace ifsdyn {

// High-precision floating value used by the kneading-root and conjugacy
// machinery. The mantissa width is set once per process, default 128 bits,
// overridable through IFSDYN_PRECISION_BITS.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                            boost::multiprecision::et_off>;

namespace detail {

inline int& precision_bits_storage() {
    static int bits = 0;
    return bits;
}

}  // namespace detail

inline void set_precision_bits(int bits) {
    bits = std::max(bits, 64);
    detail::precision_bits_storage() = bits;
    // boost tracks precision in decimal digits
    const int digits10 = static_cast<int>(bits * 0.30103) + 2;
    Real::default_precision(digits10);
}

inline int precision_bits() {
    if (detail::precision_bits_storage() == 0) {
        int bits = 128;
        if (const char* env = std::getenv("IFSDYN_PRECISION_BITS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v > 0) bits = static_cast<int>(v);
        }
        set_precision_bits(bits);
    }
    return detail::precision_bits_storage();
}

inline Real to_real(const Rational& q) {
    precision_bits();
    return Real(q);
}

// Exact conversion: every finite binary float is a dyadic rational.
inline Rational to_rational(const Real& x) {
    mpz_t z;
    mpz_init(z);
    const mpfr_exp_t e = mpfr_get_z_2exp(z, x.backend().data());
    Rational r(Integer(z));
    mpz_clear(z);
    if (e >= 0) {
        r *= Rational(Integer(1) << static_cast<unsigned>(e));
    } else {
        r /= Rational(Integer(1) << static_cast<unsigned>(-e));
    }
    return r;
}

// Sound-but-crude rounding slack: `ops` elementary operations on values of
// magnitude <= mag, inflated to dominate accumulated rounding error.
inline Real rounding_slack(const Real& mag, long ops) {
    const Real eps = ldexp(Real(1), -(precision_bits() - 3));
    return (abs(mag) + 1) * eps * Real(std::max(ops, 1L));
}

inline std::string to_string(const Real& x, int digits = 0) {
    if (digits <= 0) digits = static_cast<int>(precision_bits() * 0.30103) - 2;
    return x.str(digits);
}

}  // namespace ifsdyn
