#ifndef DUVAL_INTEGER_HPP
#define DUVAL_INTEGER_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace duval {

/// Lattice coordinates. Every product or sum on the hot paths goes through
/// the checked helpers below, so an overflow is reported instead of wrapping.
using Int = std::int64_t;

/// Unbounded integers for determinants, minors and polynomial coefficients.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int checked_add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("lattice coordinate overflow in addition");
    }
    return out;
}

inline Int checked_sub(Int a, Int b) {
    Int out;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw std::overflow_error("lattice coordinate overflow in subtraction");
    }
    return out;
}

inline Int checked_mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("lattice coordinate overflow in multiplication");
    }
    return out;
}

inline Int narrow(const BigInt& value) {
    if (value > std::numeric_limits<Int>::max() || value < std::numeric_limits<Int>::min()) {
        throw std::overflow_error("value does not fit a lattice coordinate: " + value.str());
    }
    return static_cast<Int>(value);
}

inline Int abs_gcd(Int a, Int b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

inline bool is_prime(Int n) {
    if (n < 2) {
        return false;
    }
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace duval

#endif
