#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace debruijn {

// All counting identities in this library are exact; these are the only
// numeric types results are reported in.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

/// q^e as a u64, throwing if the value does not fit in 62 bits.
std::uint64_t pow_u64(std::uint64_t base, unsigned exp);

/// Whether q^e fits in 62 bits (safe headroom for index arithmetic).
bool pow_fits_u64(std::uint64_t base, unsigned exp);

std::string to_decimal(const BigInt& v);

/// Canonical rendering: "n" when the denominator is 1, else "n/d".
std::string to_decimal(const Rational& v);

}  // namespace debruijn
