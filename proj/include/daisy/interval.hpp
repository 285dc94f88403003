#pragma once

// Outward-rounded interval arithmetic over long double.
//
// Every basic operation widens its result by one ulp on each side. Library
// transcendentals (expl, expm1l, powl, tgammal) are trusted to a relative
// error of transcendental_budget, which is folded into the enclosure.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace daisy {

inline constexpr long double transcendental_budget = 1e-15L;

struct IntervalValue {
    long double lo = 0.0L;
    long double hi = 0.0L;
    /// Largest relative error assumed for any single transcendental call
    /// that fed this enclosure.
    long double error_budget = 0.0L;

    static IntervalValue point(long double x) { return {x, x, 0.0L}; }

    long double width() const { return hi - lo; }
    long double mid() const { return lo + (hi - lo) / 2; }
    bool contains(long double x) const { return lo <= x && x <= hi; }

    /// "value > c" is only ever claimed through lo.
    bool certainly_greater(long double c) const { return lo > c; }
    bool certainly_less(long double c) const { return hi < c; }
};

namespace detail {

inline long double down(long double x)
{
    return std::nextafter(x, -std::numeric_limits<long double>::infinity());
}

inline long double up(long double x)
{
    return std::nextafter(x, std::numeric_limits<long double>::infinity());
}

inline IntervalValue make(long double a, long double b, long double budget)
{
    return {down(std::min(a, b)), up(std::max(a, b)), budget};
}

/// Widens a library value v by the relative transcendental budget.
inline IntervalValue trusted(long double v)
{
    long double slack = std::fabs(v) * transcendental_budget;
    return {down(v - slack), up(v + slack), transcendental_budget};
}

}  // namespace detail

inline IntervalValue operator+(const IntervalValue& a, const IntervalValue& b)
{
    return {detail::down(a.lo + b.lo), detail::up(a.hi + b.hi), std::max(a.error_budget, b.error_budget)};
}

inline IntervalValue operator-(const IntervalValue& a, const IntervalValue& b)
{
    return {detail::down(a.lo - b.hi), detail::up(a.hi - b.lo), std::max(a.error_budget, b.error_budget)};
}

inline IntervalValue operator-(const IntervalValue& a) { return {-a.hi, -a.lo, a.error_budget}; }

inline IntervalValue operator*(const IntervalValue& a, const IntervalValue& b)
{
    long double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {detail::down(*std::min_element(p, p + 4)), detail::up(*std::max_element(p, p + 4)),
            std::max(a.error_budget, b.error_budget)};
}

inline IntervalValue operator/(const IntervalValue& a, const IntervalValue& b)
{
    if (b.lo <= 0.0L && b.hi >= 0.0L) {
        throw std::domain_error("interval division by an enclosure containing zero");
    }
    long double p[] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
    return {detail::down(*std::min_element(p, p + 4)), detail::up(*std::max_element(p, p + 4)),
            std::max(a.error_budget, b.error_budget)};
}

inline IntervalValue operator*(long double c, const IntervalValue& a) { return IntervalValue::point(c) * a; }
inline IntervalValue operator+(long double c, const IntervalValue& a) { return IntervalValue::point(c) + a; }

/// exp is increasing, so the enclosure is [exp(lo), exp(hi)] widened.
inline IntervalValue exp(const IntervalValue& x)
{
    IntervalValue a = detail::trusted(std::exp(x.lo));
    IntervalValue b = detail::trusted(std::exp(x.hi));
    return {a.lo, b.hi, std::max(x.error_budget, transcendental_budget)};
}

/// e^x - 1, accurate near zero; increasing.
inline IntervalValue expm1(const IntervalValue& x)
{
    IntervalValue a = detail::trusted(std::expm1(x.lo));
    IntervalValue b = detail::trusted(std::expm1(x.hi));
    return {a.lo, b.hi, std::max(x.error_budget, transcendental_budget)};
}

/// Gamma at a point x > 0.
inline IntervalValue gamma(long double x)
{
    if (!(x > 0.0L)) {
        throw std::domain_error("gamma enclosure needs x > 0");
    }
    return detail::trusted(std::tgamma(x));
}

/// base^(p/q) for base > 0 given as a point; trusted powl.
inline IntervalValue pow_point(long double base, long double exponent)
{
    return detail::trusted(std::pow(base, exponent));
}

inline IntervalValue sqrt(const IntervalValue& x)
{
    if (x.lo < 0.0L) {
        throw std::domain_error("sqrt of an enclosure reaching below zero");
    }
    // sqrtl is correctly rounded; one ulp of outward slack suffices.
    return {detail::down(std::sqrt(x.lo)), detail::up(std::sqrt(x.hi)), x.error_budget};
}

}  // namespace daisy
