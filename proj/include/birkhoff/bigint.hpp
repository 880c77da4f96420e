#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace birkhoff {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// C(n, k) for nonnegative n, k.
inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

// C(u, k) extended to any integer u as the degree-k polynomial
// u(u-1)...(u-k+1)/k!.  Needed for evaluating Ehrhart polynomials at
// negative dilation factors.
inline BigInt binomial_poly(const BigInt& u, unsigned k) {
    BigInt num = 1;
    for (unsigned i = 0; i < k; ++i) num *= u - i;
    return num / factorial(k);  // exact: k consecutive integers
}

inline BigInt ipow(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// "p/q" with q > 0, or just "p" when q == 1.
inline std::string to_decimal(const BigRational& v) {
    BigInt num = boost::multiprecision::numerator(v);
    BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace birkhoff
