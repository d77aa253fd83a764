#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace evchar {

// Exact arithmetic everywhere; no floating point in any computation path.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

// "p/q" with the "/q" omitted for integers, so reports stay readable.
inline std::string to_string(const BigRat& v) {
    BigInt num = boost::multiprecision::numerator(v);
    BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline bool is_integral(const BigRat& v) {
    return boost::multiprecision::denominator(v) == 1;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline BigInt factorial(long n) {
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace evchar
