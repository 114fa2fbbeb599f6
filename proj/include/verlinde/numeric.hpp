#pragma once

/**
 * @file numeric.hpp
 * @brief Scalar types, error classes and small arithmetic helpers shared by
 *        every module of the library.
 */

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace verlinde {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Base class of everything the library throws.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violation: bad range, non-prime p, malformed text, mismatched p.
class invalid_input : public error {
public:
    using error::error;
};

/// A quantity that must be an integer (or divide exactly) did not. Seeing
/// this on well-formed input means a bug, or inconsistent dimension data.
class integrality_error : public error {
public:
    using error::error;
};

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_prime(std::int64_t p) {
    if (!is_prime(p)) throw invalid_input("p = " + std::to_string(p) + " is not a prime");
}

inline void require_odd_prime(std::int64_t p, const char* what) {
    require_prime(p);
    if (p == 2)
        throw invalid_input(std::string(what) + " requires p > 2 (the trace and Galois "
                            "machinery is only defined for odd p)");
}

/// Non-negative remainder.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("multiplicity overflow");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("multiplicity overflow");
    return out;
}

inline bool is_integer(const Rational& x) {
    return boost::multiprecision::denominator(x) == 1;
}

/// Converts an integral rational to int64, throwing integrality_error otherwise.
inline std::int64_t to_int64(const Rational& x, const char* what) {
    if (!is_integer(x))
        throw integrality_error(std::string(what) + ": expected an integer, got " + x.str());
    const Integer n = boost::multiprecision::numerator(x);
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error(std::string(what) + ": value does not fit in 64 bits");
    return n.convert_to<std::int64_t>();
}

inline std::int64_t to_int64(const Integer& n, const char* what) {
    return to_int64(Rational(n), what);
}

}  // namespace verlinde
