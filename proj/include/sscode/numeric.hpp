#ifndef SSCODE_NUMERIC_HPP
#define SSCODE_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

/// Exact integer and rational arithmetic used throughout the library.
/// All cardinalities, bound evaluations and LP coefficients are exact;
/// no floating point is involved anywhere in the code paths that decide
/// parameters or feasibility.

namespace sscode {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, std::uint64_t e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

/// C(n, k) in native width; valid for n <= 64 without overflow.
inline std::uint64_t binomial_u64(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r / i * (n - k + i) + r % i * (n - k + i) / i;
    }
    return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const BigRat& v) {
    if (boost::multiprecision::denominator(v) == 1) return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" + boost::multiprecision::denominator(v).str();
}

}  // namespace sscode

#endif
