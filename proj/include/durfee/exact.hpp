#ifndef DURFEE_EXACT_HPP
#define DURFEE_EXACT_HPP

#include <cmath>
#include <cstddef>
#include <string>

#include <gmp.h>

#include <boost/multiprecision/gmp.hpp>

namespace durfee {

using big_int = boost::multiprecision::mpz_int;
using rational = boost::multiprecision::mpq_rational;

// Relative error bound of to_double(): mpq_get_d truncates toward zero, so
// the result is within one unit in the last place of the exact quotient.
inline constexpr double conversion_error_bound = 0x1p-52;

// Correctly handles operands of any size; converting numerator and
// denominator separately would overflow for the moments we deal with.
inline double to_double(const rational& q) { return mpq_get_d(q.backend().data()); }

inline double to_double(const big_int& z) { return mpz_get_d(z.backend().data()); }

// Truncated to 64 significant bits, then rounded once into the x87 format.
inline long double to_long_double(const rational& q)
{
    namespace mp = boost::multiprecision;
    if (q == 0)
        return 0.0L;
    const big_int num = mp::abs(mp::numerator(q));
    const big_int& den = mp::denominator(q);
    const long shift = 65 - (static_cast<long>(mp::msb(num)) - static_cast<long>(mp::msb(den)));
    const big_int scaled = shift >= 0 ? big_int((num << shift) / den) : big_int(num / (den << -shift));
    const auto hi = static_cast<unsigned long long>(scaled >> 32);
    const auto lo = static_cast<unsigned long long>(scaled & 0xffffffffu);
    const long double magnitude = std::ldexp(std::ldexp(static_cast<long double>(hi), 32) + lo,
                                             static_cast<int>(-shift));
    return q < 0 ? -magnitude : magnitude;
}

inline std::string to_decimal(const big_int& z) { return z.str(); }

// Lossless "num/den" form, always with an explicit denominator.
inline std::string to_fraction(const rational& q)
{
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

inline std::size_t isqrt(std::size_t n)
{
    auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

} // namespace durfee

#endif
