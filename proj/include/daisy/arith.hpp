#pragma once

// Exact integer and rational helpers on top of GMP.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace daisy {

__extension__ typedef unsigned __int128 u128;

using Integer = mpz_class;
using Rational = mpq_class;

/// C(n, k) as an exact integer; zero when k > n.
inline Integer binomial(unsigned long n, unsigned long k)
{
    Integer out;
    if (k > n) {
        return out;
    }
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

/// C(n, k) with a big top argument.
inline Integer binomial(const Integer& n, unsigned long k)
{
    if (n < 0 || n < k) {
        return Integer(0);
    }
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

inline Integer from_u64(std::uint64_t v)
{
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return Integer(static_cast<unsigned long>(v));
}

/// Binomial with a possibly negative top argument, using C(n,k) = 0 for n < k
/// (including every negative n). This is the convention all counting formulas
/// here rely on.
inline Integer binomial_signed(long n, long k)
{
    if (k < 0 || n < k) {
        return Integer(0);
    }
    return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
}

inline Integer ipow(const Integer& base, unsigned long exp)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline Integer factorial(unsigned long n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

/// t^e for a possibly negative exponent.
inline Rational rpow(unsigned long base, long exp)
{
    Integer p = ipow(Integer(base), static_cast<unsigned long>(exp < 0 ? -exp : exp));
    Rational out = exp < 0 ? Rational(Integer(1), p) : Rational(p);
    out.canonicalize();
    return out;
}

inline Integer floor_of(const Rational& q)
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

inline Integer ceil_of(const Rational& q)
{
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

/// "p/q" with an explicit denominator, even when it is 1.
inline std::string to_fraction_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Decimal rendering rounded toward negative infinity. Integral values are
/// printed without a fractional part; everything else gets exactly `places`
/// digits. The rendered number never exceeds `q`.
inline std::string to_decimal_floor(const Rational& q, unsigned places = 6)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    Integer scale = ipow(Integer(10), places);
    Integer scaled = floor_of(q * Rational(scale));
    bool negative = scaled < 0;
    Integer mag = negative ? Integer(-scaled) : scaled;
    std::string digits = mag.get_str();
    if (digits.size() <= places) {
        digits.insert(0, places + 1 - digits.size(), '0');
    }
    std::string out = digits.substr(0, digits.size() - places);
    if (places > 0) {
        out += "." + digits.substr(digits.size() - places);
    }
    return negative ? "-" + out : out;
}

/// Parses "p/q", "p", or a plain decimal such as "0.034701".
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty()) {
        throw std::invalid_argument("empty rational");
    }
    try {
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string whole = s.substr(0, dot);
            std::string frac = s.substr(dot + 1);
            bool negative = !whole.empty() && whole[0] == '-';
            std::string mag = negative ? whole.substr(1) : whole;
            Integer num(mag.empty() ? std::string("0") : mag, 10);
            Integer scale = ipow(Integer(10), frac.size());
            Rational out(num * scale + (frac.empty() ? Integer(0) : Integer(frac, 10)), scale);
            out.canonicalize();
            return negative ? Rational(-out) : out;
        }
        Rational out(s, 10);
        out.canonicalize();
        return out;
    }
    catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

inline long double to_long_double(const Rational& q)
{
    // mpq_get_d loses everything below double precision; good enough for
    // presentation and for seeding numeric searches, never for certification.
    return static_cast<long double>(q.get_d());
}

/// Saturating C(n,k) in 64 bits: returns UINT64_MAX when the true value does
/// not fit. Used for enumeration budgets and rank arithmetic.
inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    u128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > UINT64_MAX) {
            return UINT64_MAX;
        }
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace daisy
