#include "sperner/bigint.hpp"

namespace sperner {

long bit_length(const BigInt& x) {
    if (x < 0) throw std::domain_error("bit_length: negative argument");
    if (x == 0) return 0;
    return static_cast<long>(boost::multiprecision::msb(x)) + 1;
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long t = 1; t <= k; ++t) {
        r *= (n - k + t);
        r /= t;  // exact: r is C(n-k+t, t) after this step
    }
    return r;
}

BigInt iroot(const BigInt& x, long q) {
    if (x < 0) throw std::domain_error("iroot: negative radicand");
    if (q < 1) throw std::domain_error("iroot: order must be >= 1");
    if (q == 1 || x <= 1) return x;

    using boost::multiprecision::pow;
    const unsigned uq = static_cast<unsigned>(q);
    // Start above the root, then Newton steps are monotone decreasing.
    BigInt r = BigInt(1) << ((bit_length(x) + q - 1) / q);
    while (true) {
        BigInt next = ((q - 1) * r + x / pow(r, uq - 1)) / q;
        if (next >= r) break;
        r = next;
    }
    while (pow(r, uq) > x) --r;
    while (pow(r + 1, uq) <= x) ++r;
    return r;
}

}  // namespace sperner
