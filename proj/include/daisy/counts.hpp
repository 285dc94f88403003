#pragma once

// Counting r-subsets by spacing: P(n,r,d) on an interval and N(n,r,t,d) on
// the cycle Z_n.

#include "daisy/arith.hpp"
#include "daisy/combinations.hpp"
#include "daisy/cyclic.hpp"
#include "daisy/parallel.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace daisy {

enum class CountMethod { Formula, Brute };

inline const char* to_string(CountMethod m)
{
    return m == CountMethod::Formula ? "FORMULA" : "BRUTE";
}

/// Increasing sequences 1 <= i_1 < ... < i_r <= n with consecutive
/// differences at least d: C(n - (r-1)(d-1), r).
inline Integer count_P(long n, long r, long d)
{
    if (n < 1 || r < 1 || d < 1) {
        throw std::invalid_argument("count_P needs n, r, d >= 1");
    }
    return binomial_signed(n - (r - 1) * (d - 1), r);
}

/// (n/r) C(n-1-(d-1)r, r-1) for d >= 1, without the range check. Exact for
/// every 1 <= d <= floor(n/r), and zero beyond.
inline Integer circular_gap_count(long n, long r, long d)
{
    Integer top = Integer(n) * binomial_signed(n - 1 - (d - 1) * r, r - 1);
    if (!mpz_divisible_ui_p(top.get_mpz_t(), static_cast<unsigned long>(r))) {
        throw std::logic_error("circular gap count is not integral");
    }
    Integer out;
    mpz_divexact_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(r));
    return out;
}

/// Histogram of d_t over all r-subsets of Z_n: out[d] = #{A : d_t(A) = d}.
inline std::vector<std::uint64_t> windowed_diameter_histogram(unsigned n, unsigned r, unsigned t,
                                                              std::uint64_t budget = default_enumeration_budget,
                                                              unsigned threads = 1)
{
    if (r < 2 || r > n) {
        throw std::invalid_argument("need 2 <= r <= n");
    }
    if (t < 2 || t > r) {
        throw std::invalid_argument("need 2 <= t <= r");
    }
    check_budget(n, r, budget, "count_N brute force");
    const std::size_t tasks = n - r + 1;
    std::vector<std::vector<std::uint64_t>> parts(tasks);
    run_tasks(tasks, threads, [&](std::size_t first) {
        auto& h = parts[first];
        h.assign(n + 1, 0);
        for_each_combination_from(n, r, static_cast<unsigned>(first), [&](std::span<const Vertex> a) {
            ++h[windowed_diameter_sorted(a, n, t)];
        });
    });
    std::vector<std::uint64_t> out(n + 1, 0);
    for (const auto& h : parts) {
        for (unsigned d = 0; d <= n; ++d) {
            out[d] += h[d];
        }
    }
    return out;
}

/// N(n,r,t,d): number of r-subsets of Z_n with d_t(A) >= d.
/// Formula requires t = 2 and d <= floor(n/r); outside that range it throws
/// std::domain_error and the caller should use Brute.
inline Integer count_N(unsigned n, unsigned r, unsigned t, unsigned d, CountMethod method,
                       std::uint64_t budget = default_enumeration_budget)
{
    if (method == CountMethod::Formula) {
        if (t != 2) {
            throw std::domain_error("closed form for N exists only for t = 2");
        }
        if (r < 2 || r > n) {
            throw std::invalid_argument("need 2 <= r <= n");
        }
        if (d == 0) {
            return binomial(n, r);
        }
        if (d > n / r) {
            throw std::domain_error("closed form for N(" + std::to_string(n) + "," + std::to_string(r) +
                                    ",2,d) is valid only for d <= n/r; got d=" + std::to_string(d));
        }
        return circular_gap_count(n, r, d);
    }
    auto hist = windowed_diameter_histogram(n, r, t, budget);
    std::uint64_t total = 0;
    for (unsigned e = d; e <= n; ++e) {
        total += hist[e];
    }
    return from_u64(total);
}

/// N(n,r,t,d) for d = 0..n.
struct CountTable {
    unsigned n = 0;
    unsigned r = 0;
    unsigned t = 0;
    std::vector<Integer> values;
    CountMethod method = CountMethod::Brute;

    /// Non-increasing, N(0) = C(n,r), and zero beyond (t-1)n/r.
    bool satisfies_invariants() const
    {
        if (values.size() != n + 1 || values[0] != binomial(n, r)) {
            return false;
        }
        for (unsigned d = 1; d <= n; ++d) {
            if (values[d] > values[d - 1]) {
                return false;
            }
            if (static_cast<unsigned long>(d) * r > static_cast<unsigned long>(t - 1) * n && values[d] != 0) {
                return false;
            }
        }
        return true;
    }

    Integer sum() const
    {
        Integer s(0);
        for (const auto& v : values) {
            s += v;
        }
        return s;
    }
};

/// Formula tables are available for t = 2 only. They use the closed form up
/// to floor(n/r) and zero beyond, the range the C3A bound sums over.
inline CountTable count_table(unsigned n, unsigned r, unsigned t, CountMethod method,
                              std::uint64_t budget = default_enumeration_budget, unsigned threads = 1)
{
    CountTable table{n, r, t, std::vector<Integer>(n + 1, Integer(0)), method};
    if (method == CountMethod::Formula) {
        if (t != 2) {
            throw std::domain_error("formula count table needs t = 2");
        }
        if (r < 2 || r > n) {
            throw std::invalid_argument("need 2 <= r <= n");
        }
        table.values[0] = binomial(n, r);
        for (unsigned d = 1; d <= n / r; ++d) {
            table.values[d] = circular_gap_count(n, r, d);
        }
        return table;
    }
    auto hist = windowed_diameter_histogram(n, r, t, budget, threads);
    std::uint64_t tail = 0;
    for (unsigned d = n + 1; d-- > 0;) {
        tail += hist[d];
        table.values[d] = from_u64(tail);
    }
    return table;
}

}  // namespace daisy
