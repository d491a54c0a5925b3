#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace uec {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Thrown when a computation would exceed a configured resource cap.
// Callers treat this as a refusal, not a bug (CLI exit code 4).
class ResourceCapError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Thrown when a verified invariant or acceptance-grade check breaks
// at runtime (CLI exit code 3).
class InvariantError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Deque keeps element references stable across growth, so concurrent
// readers stay valid while one writer extends the cache.
inline const BigInt& factorial(unsigned n) {
    static std::deque<BigInt> cache{1, 1};
    static std::shared_mutex mutex;
    {
        std::shared_lock lock(mutex);
        if (n < cache.size()) return cache[n];
    }
    std::unique_lock lock(mutex);
    while (cache.size() <= n) cache.push_back(cache.back() * BigInt(cache.size()));
    return cache[n];
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

// log2 of a positive big integer, accurate to ~1e-16 relative.
inline double log2_bigint(const BigInt& value) {
    if (value <= 0) throw std::invalid_argument("log2_bigint: value must be positive");
    const std::size_t bits = boost::multiprecision::msb(value) + 1;
    if (bits <= 63) return std::log2(static_cast<double>(value.convert_to<std::uint64_t>()));
    const std::size_t shift = bits - 63;
    const BigInt top = value >> shift;
    return std::log2(static_cast<double>(top.convert_to<std::uint64_t>())) +
           static_cast<double>(shift);
}

inline double log2_bigrat(const BigRat& value) {
    if (value <= 0) throw std::invalid_argument("log2_bigrat: value must be positive");
    return log2_bigint(boost::multiprecision::numerator(value)) -
           log2_bigint(boost::multiprecision::denominator(value));
}

// Conversion that survives magnitudes far outside double range: the top 62
// bits of numerator and denominator carry the mantissa, the bit lengths the
// exponent. Underflows to 0 and overflows to inf, never traps.
inline double rat_to_double(const BigRat& value) {
    if (value == 0) return 0.0;
    if (value < 0) return -rat_to_double(BigRat(-value));
    const BigInt& num = boost::multiprecision::numerator(value);
    const BigInt& den = boost::multiprecision::denominator(value);
    const auto nbits = static_cast<std::ptrdiff_t>(boost::multiprecision::msb(num)) + 1;
    const auto dbits = static_cast<std::ptrdiff_t>(boost::multiprecision::msb(den)) + 1;
    const std::ptrdiff_t nshift = nbits > 62 ? nbits - 62 : 0;
    const std::ptrdiff_t dshift = dbits > 62 ? dbits - 62 : 0;
    const double top_n = static_cast<double>((num >> nshift).convert_to<std::uint64_t>());
    const double top_d = static_cast<double>((den >> dshift).convert_to<std::uint64_t>());
    const std::ptrdiff_t exp = nshift - dshift;
    if (exp > 1030) return std::numeric_limits<double>::infinity();
    if (exp < -1080) return 0.0;
    return std::ldexp(top_n / top_d, static_cast<int>(exp));
}

inline BigRat rat_pow(const BigRat& base, unsigned exp) {
    BigRat result(1), b = base;
    unsigned e = exp;
    while (e > 0) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

// Exact rational value of a finite double (every finite double is a
// dyadic rational).
inline BigRat rat_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rat_from_double: non-finite input");
    if (x == 0.0) return BigRat(0);
    int exp2 = 0;
    const double mant = std::frexp(x, &exp2);                 // x = mant * 2^exp2, |mant| in [0.5,1)
    const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));  // integer, |.| < 2^53
    BigRat r(scaled);
    const int shift = exp2 - 53;
    if (shift >= 0) r *= BigRat(BigInt(1) << shift);
    else r /= BigRat(BigInt(1) << (-shift));
    return r;
}

}  // namespace uec
