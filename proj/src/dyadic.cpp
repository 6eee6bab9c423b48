#include "sperner/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace sperner {

Dyadic::Dyadic(BigInt numerator, long exponent) : num_(std::move(numerator)), exp_(exponent) {
    if (num_ < 0) throw std::domain_error("Dyadic: negative numerator");
    if (exp_ < 0) throw std::domain_error("Dyadic: negative exponent");
}

Dyadic Dyadic::widened(long exponent) const {
    if (exponent < exp_) throw std::domain_error("Dyadic::widened: exponent would shrink");
    return Dyadic(num_ << (exponent - exp_), exponent);
}

Dyadic Dyadic::normalized() const {
    if (num_ == 0) return Dyadic();
    BigInt n = num_;
    long e = exp_;
    while (e > 0 && (n & 1) == 0) {
        n >>= 1;
        --e;
    }
    return Dyadic(n, e);
}

Dyadic Dyadic::operator+(const Dyadic& rhs) const {
    long e = std::max(exp_, rhs.exp_);
    return Dyadic((num_ << (e - exp_)) + (rhs.num_ << (e - rhs.exp_)), e);
}

Dyadic Dyadic::operator-(const Dyadic& rhs) const {
    long e = std::max(exp_, rhs.exp_);
    BigInt a = num_ << (e - exp_);
    BigInt b = rhs.num_ << (e - rhs.exp_);
    if (b > a) throw std::domain_error("Dyadic subtraction underflow (subtrahend larger)");
    return Dyadic(a - b, e);
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& rhs) const {
    long e = std::max(exp_, rhs.exp_);
    BigInt a = num_ << (e - exp_);
    BigInt b = rhs.num_ << (e - rhs.exp_);
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool Dyadic::operator==(const Dyadic& rhs) const {
    return (*this <=> rhs) == std::strong_ordering::equal;
}

double Dyadic::to_double() const {
    return std::ldexp(num_.convert_to<double>(), static_cast<int>(-exp_));
}

std::string Dyadic::str() const {
    Dyadic n = normalized();
    return n.num_.str() + "/2^" + std::to_string(n.exp_);
}

BitString binary_digits(const Dyadic& x, long k) {
    if (k < 1) throw std::domain_error("binary_digits: k must be positive");
    if (x.is_zero() || x > Dyadic::one())
        throw std::domain_error("binary_digits: argument must lie in (0, 1]");
    if (x == Dyadic::one()) return BitString::ones(static_cast<std::size_t>(k));

    // Truncation floor(x * 2^k) < 2^k, so exactly k digits.
    BigInt t = x.exponent() <= k ? BigInt(x.numerator() << (k - x.exponent()))
                                 : BigInt(x.numerator() >> (x.exponent() - k));
    BitString bits(static_cast<std::size_t>(k));
    for (long j = 1; j <= k; ++j)
        if (boost::multiprecision::bit_test(t, static_cast<unsigned>(k - j)))
            bits.set_bit(static_cast<std::size_t>(j), true);
    return bits;
}

Dyadic value_of(const BitString& bits) {
    const long len = static_cast<long>(bits.length());
    BigInt num = 0;
    for (long p : bits.to_set())
        boost::multiprecision::bit_set(num, static_cast<unsigned>(len - p));
    return Dyadic(num, len);
}

Dyadic kraft_sum(const std::vector<long>& lengths) {
    long e = 0;
    for (long len : lengths) {
        if (len < 1) throw std::domain_error("kraft_sum: lengths must be positive");
        e = std::max(e, len);
    }
    BigInt num = 0;
    for (long len : lengths) num += BigInt(1) << (e - len);
    return Dyadic(num, e);
}

}  // namespace sperner
