#pragma once

#include "sperner/bigint.hpp"
#include "sperner/bitstring.hpp"

#include <compare>
#include <string>
#include <vector>

namespace sperner {

/// Exact nonnegative dyadic rational numerator / 2^exponent.
///
/// The pair is kept exactly as constructed (no automatic reduction), so a
/// value produced at working exponent k reads off its k binary digits
/// directly from the numerator. Comparisons and equality are by value.
/// All operations are exact; subtraction below zero throws.
class Dyadic {
public:
    Dyadic() = default;  // zero
    Dyadic(BigInt numerator, long exponent);

    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return Dyadic(1, 0); }

    const BigInt& numerator() const { return num_; }
    long exponent() const { return exp_; }
    bool is_zero() const { return num_ == 0; }

    /// Same value at a larger (or equal) exponent.
    Dyadic widened(long exponent) const;
    /// Equal value with minimal exponent (numerator odd or zero).
    Dyadic normalized() const;

    Dyadic operator+(const Dyadic& rhs) const;
    Dyadic operator-(const Dyadic& rhs) const;  // throws std::domain_error if rhs > *this

    std::strong_ordering operator<=>(const Dyadic& rhs) const;
    bool operator==(const Dyadic& rhs) const;

    double to_double() const;
    /// Normalized serialization "m/2^e".
    std::string str() const;

private:
    BigInt num_ = 0;
    long exp_ = 0;
};

/// First k binary digits of x, 0 < x <= 1. For x with exponent <= k the
/// digits carry x exactly; otherwise they truncate. x = 1 yields the
/// all-ones string (the nonterminating expansion 0.111... is used).
BitString binary_digits(const Dyadic& x, long k);

/// Exact value sum(bit_j / 2^j) of a bit string; exponent = length.
Dyadic value_of(const BitString& bits);

/// Exact sum of 2^-len over a multiset of codeword lengths.
Dyadic kraft_sum(const std::vector<long>& lengths);

}  // namespace sperner
