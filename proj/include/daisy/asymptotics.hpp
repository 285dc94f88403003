#pragma once

// Numeric side of the asymptotic results: the envelopes f and F, the
// constant (m!)^(1/m) Gamma(1 + 1/m), exact spacing expectations, and Monte
// Carlo estimates of e_{r,t}.

#include "daisy/arith.hpp"
#include "daisy/continuous.hpp"
#include "daisy/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace daisy {

/// a_{r,m}: expected m-th smallest spacing of r uniform points on the unit
/// circle, (1/r) * sum_{i=1..m} 1/(r+1-i).
inline Rational renyi_a(unsigned r, unsigned m)
{
    if (m < 1 || m > r) {
        throw std::invalid_argument("renyi_a needs 1 <= m <= r");
    }
    Rational sum(0);
    for (unsigned i = 1; i <= m; ++i) {
        sum += Rational(1, r + 1 - i);
    }
    Rational out = sum / Rational(r);
    out.canonicalize();
    return out;
}

struct SpacingClosedForms {
    Rational e_two;  ///< e_{r,2} = 1/r^2
    Rational e_all;  ///< e_{r,r} = 1 - H_r / r
};

inline SpacingClosedForms spacing_closed_forms(unsigned r)
{
    if (r < 2) {
        throw std::invalid_argument("spacing closed forms need r >= 2");
    }
    SpacingClosedForms out{renyi_a(r, 1), Rational(1) - renyi_a(r, r)};
    out.e_all.canonicalize();
    return out;
}

struct SpacingEstimate {
    unsigned r = 0;
    unsigned t = 0;
    std::uint64_t samples = 0;
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t seed = 0;
};

inline constexpr std::uint64_t min_spacing_samples = 1000;

/// Mean of the shortest arc holding t of r uniform points. Deterministic in
/// (r, t, samples, seed) for any thread count.
inline SpacingEstimate estimate_spacing(unsigned r, unsigned t, std::uint64_t samples, std::uint64_t seed,
                                        unsigned threads = 1)
{
    if (t < 2 || t > r) {
        throw std::invalid_argument("estimate_spacing needs 2 <= t <= r");
    }
    if (samples < min_spacing_samples) {
        throw std::invalid_argument("estimate_spacing needs at least 1000 samples");
    }
    MeanAccumulator acc = block_monte_carlo(samples, seed, threads, [r, t](StreamRng& rng) {
        // One buffer per worker thread; blocks never share a buffer concurrently.
        thread_local std::vector<double> pts;
        pts.resize(r);
        for (double& p : pts) {
            p = rng.uniform();
        }
        std::sort(pts.begin(), pts.end());
        return min_window_arc(pts, t);
    });
    return {r, t, samples, acc.mean, acc.stderr_of_mean(), seed};
}

/// Enclosure of (m!)^(1/m) * Gamma(1 + 1/m), the limit of r^(1+1/m) e_{r,m+1}.
inline IntervalValue asympt_constant(unsigned m)
{
    if (m < 1) {
        throw std::invalid_argument("asympt_constant needs m >= 1");
    }
    if (m == 1) {
        return IntervalValue::point(1.0L);
    }
    const long double inv_m = 1.0L / static_cast<long double>(m);
    IntervalValue root;
    if (m <= 20) {
        // m! is exact in a 64-bit mantissa here.
        long double fact = 1.0L;
        for (unsigned i = 2; i <= m; ++i) {
            fact *= static_cast<long double>(i);
        }
        root = pow_point(fact, inv_m);
    }
    else {
        root = detail::trusted(std::exp(std::lgamma(static_cast<long double>(m) + 1.0L) * inv_m));
    }
    return root * gamma(1.0L + inv_m);
}

namespace detail {

inline void require_positive(long double x)
{
    if (!(x > 0.0L)) {
        throw std::domain_error("argument must be positive");
    }
}

/// 1 - e^{-2x} as an enclosure, for x > 0.
inline IntervalValue one_minus_exp_neg2x(long double x)
{
    return -expm1(IntervalValue::point(-2.0L * x));
}

}  // namespace detail

/// f(x) = 2x e^{-x} (1 + 1/(1 - e^{-2x})).
inline IntervalValue eval_f(long double x)
{
    detail::require_positive(x);
    IntervalValue X = IntervalValue::point(x);
    IntervalValue lead = 2.0L * X * exp(IntervalValue::point(-x));
    IntervalValue one = IntervalValue::point(1.0L);
    return lead * (one + one / detail::one_minus_exp_neg2x(x));
}

/// F(x) truncated after M terms of each series, with both tails bracketed.
inline IntervalValue eval_F(long double x, unsigned M)
{
    detail::require_positive(x);
    if (M < 1) {
        throw std::invalid_argument("eval_F needs M >= 1");
    }
    IntervalValue X = IntervalValue::point(x);
    IntervalValue term1 = 2.0L * X * exp(IntervalValue::point(-x)) / detail::one_minus_exp_neg2x(x);

    IntervalValue s2 = IntervalValue::point(0.0L);
    IntervalValue s3 = IntervalValue::point(0.0L);
    for (unsigned i = 1; i <= M; ++i) {
        long double half = std::ldexp(1.0L, -static_cast<int>(i));      // 2^-i, exact
        long double quarter = std::ldexp(1.0L, -2 * static_cast<int>(i));  // 4^-i, exact
        s2 = s2 + half * exp(IntervalValue::point(-half * x));
        s3 = s3 + quarter * exp(IntervalValue::point(-2.0L * half * x));
    }
    IntervalValue body = term1 + 2.0L * X * s2 - 4.0L * X * X * s3;

    // Tail of the positive series lies in (0, 2x 2^-M], of the negative one
    // in (0, 4x^2 4^-M / 3].
    IntervalValue tail2 = 2.0L * X * IntervalValue::point(std::ldexp(1.0L, -static_cast<int>(M)));
    IntervalValue tail3 = (4.0L * X * X * IntervalValue::point(std::ldexp(1.0L, -2 * static_cast<int>(M)))) /
                          IntervalValue::point(3.0L);
    IntervalValue lo = body - tail3;
    IntervalValue hi = body + tail2;
    return {lo.lo, hi.hi, body.error_budget};
}

struct Maximum {
    long double x = 0.0L;
    IntervalValue value;
};

namespace detail {

inline constexpr long double inv_phi = 0.6180339887498948482045868343656381L;

/// Golden-section search for the maximum of a unimodal g on [a, b].
template <class G>
long double golden_max(G g, long double a, long double b, long double tol)
{
    long double c = b - inv_phi * (b - a);
    long double d = a + inv_phi * (b - a);
    long double gc = g(c);
    long double gd = g(d);
    while (b - a > tol) {
        if (gc >= gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - inv_phi * (b - a);
            gc = g(c);
        }
        else {
            a = c;
            c = d;
            gc = gd;
            d = a + inv_phi * (b - a);
            gd = g(d);
        }
    }
    return (a + b) / 2;
}

}  // namespace detail

inline constexpr long double argmax_tolerance = 1e-6L;

/// Maximizer of f over [0.1, 3]; f rises from 1 to a single peak and decays.
inline Maximum maximize_f()
{
    long double x = detail::golden_max([](long double v) { return eval_f(v).lo; }, 0.1L, 3.0L, argmax_tolerance);
    return {x, eval_f(x)};
}

inline constexpr unsigned min_maximize_terms = 32;

/// Maximizes the lower envelope of F over [0.2, 3]: a grid of step 0.01
/// picks the best cell, golden-section refines inside its neighbours.
inline Maximum maximize_F(unsigned M = 64)
{
    if (M < min_maximize_terms) {
        throw std::invalid_argument("maximize_F needs M >= 32");
    }
    const long double a = 0.2L;
    const long double b = 3.0L;
    const int steps = 280;
    auto at = [&](int i) { return a + (b - a) * static_cast<long double>(i) / steps; };
    int best = 0;
    long double best_lo = eval_F(at(0), M).lo;
    for (int i = 1; i <= steps; ++i) {
        long double lo = eval_F(at(i), M).lo;
        if (lo > best_lo) {
            best_lo = lo;
            best = i;
        }
    }
    long double left = at(best > 0 ? best - 1 : 0);
    long double right = at(best < steps ? best + 1 : steps);
    long double x = detail::golden_max([M](long double v) { return eval_F(v, M).lo; }, left, right,
                                       argmax_tolerance);
    if (eval_F(x, M).lo < best_lo) {
        x = at(best);
    }
    return {x, eval_F(x, M)};
}

// ---------------------------------------------------------------------------
// CSV

inline std::string format_real(long double v, int digits = 18)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lg", digits, v);
    return buf;
}

/// Rows "x,F_lo,F_hi" for `points` evenly spaced x in [x_from, x_to].
inline std::string F_curve_csv(long double x_from, long double x_to, unsigned points, unsigned M = 64)
{
    if (points < 2 || !(x_from > 0.0L) || !(x_to > x_from)) {
        throw std::invalid_argument("F curve needs 0 < x_from < x_to and at least 2 points");
    }
    std::string out = "x,F_lo,F_hi\n";
    for (unsigned i = 0; i < points; ++i) {
        long double x = x_from + (x_to - x_from) * static_cast<long double>(i) / (points - 1);
        IntervalValue v = eval_F(x, M);
        out += format_real(x) + "," + format_real(v.lo) + "," + format_real(v.hi) + "\n";
    }
    return out;
}

inline std::string spacing_csv(std::span<const SpacingEstimate> rows)
{
    std::string out = "r,t,mean,stderr\n";
    for (const auto& s : rows) {
        out += std::to_string(s.r) + "," + std::to_string(s.t) + "," + format_real(s.mean) + "," +
               format_real(s.std_error) + "\n";
    }
    return out;
}

}  // namespace daisy
