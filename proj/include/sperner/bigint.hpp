#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace sperner {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(long e) {
    if (e < 0) throw std::domain_error("pow2: negative exponent");
    return BigInt(1) << e;
}

/// Number of bits needed to write x in binary; 0 for x = 0.
long bit_length(const BigInt& x);

/// Exact binomial coefficient. C(n,k) = 0 for k < 0 or k > n, C(n,0) = 1.
BigInt binomial(long n, long k);

/// Floor of the q-th root of x, x >= 0, q >= 1.
BigInt iroot(const BigInt& x, long q);

}  // namespace sperner
