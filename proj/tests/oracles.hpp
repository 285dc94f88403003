#pragma once

// Independent reference implementations. Nothing here calls into the
// library's counting or graph code; they are slow on purpose.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

__extension__ typedef unsigned __int128 u128;

using Set = std::vector<unsigned>;

/// Pascal triangle in 128-bit integers, exact for n <= 120.
inline u128 pascal(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    std::vector<u128> row(n + 1, 0);
    row[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i; j > 0; --j) {
            row[j] += row[j - 1];
        }
    }
    return row[k];
}

inline std::uint64_t pascal64(unsigned n, unsigned k) { return static_cast<std::uint64_t>(pascal(n, k)); }

/// All k-subsets of {0..n-1}, recursively.
inline void subsets(unsigned n, unsigned k, const std::function<void(const Set&)>& fn)
{
    Set cur;
    std::function<void(unsigned)> rec = [&](unsigned start) {
        if (cur.size() == k) {
            fn(cur);
            return;
        }
        for (unsigned v = start; v < n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

/// Increasing sequences in [1,n] with consecutive differences >= d.
inline std::uint64_t brute_P(unsigned n, unsigned r, unsigned d)
{
    std::uint64_t count = 0;
    subsets(n, r, [&](const Set& a) {
        for (std::size_t i = 1; i < a.size(); ++i) {
            if (a[i] - a[i - 1] < d) {
                return;
            }
        }
        ++count;
    });
    return count;
}

/// Diameter by trying every element as the start of the directed path.
inline unsigned brute_diameter(const Set& a, unsigned n)
{
    if (a.size() < 2) {
        return 0;
    }
    unsigned best = n;
    for (unsigned start : a) {
        unsigned far = 0;
        for (unsigned x : a) {
            far = std::max(far, (x + n - start) % n);
        }
        best = std::min(best, far);
    }
    return best;
}

/// d_t as the minimum diameter over all t-subsets.
inline unsigned brute_windowed(const Set& a, unsigned n, unsigned t)
{
    unsigned best = n;
    subsets(static_cast<unsigned>(a.size()), t, [&](const Set& idx) {
        Set b;
        for (unsigned i : idx) {
            b.push_back(a[i]);
        }
        best = std::min(best, brute_diameter(b, n));
    });
    return best;
}

/// N(n,r,t,d) by enumeration with the subset-min d_t.
inline std::uint64_t brute_N(unsigned n, unsigned r, unsigned t, unsigned d)
{
    std::uint64_t count = 0;
    subsets(n, r, [&](const Set& a) {
        if (brute_windowed(a, n, t) >= d) {
            ++count;
        }
    });
    return count;
}

/// Edges of G(n,r,t,j) with the subset-min d_t.
inline std::set<Set> brute_shift_graph(unsigned n, unsigned r, unsigned t, unsigned j)
{
    std::set<Set> out;
    subsets(n, r, [&](const Set& a) {
        unsigned s = j;
        for (unsigned x : a) {
            s += x;
        }
        if (s % n <= brute_windowed(a, n, t)) {
            out.insert(a);
        }
    });
    return out;
}

/// Daisy-freeness by testing every (r+1)-subset against a std::set.
inline bool naive_daisy_free(const std::set<Set>& edges, unsigned n, unsigned r, unsigned k)
{
    bool free = true;
    subsets(n, r + 1, [&](const Set& b) {
        if (!free) {
            return;
        }
        unsigned inside = 0;
        for (std::size_t drop = 0; drop < b.size(); ++drop) {
            Set e;
            for (std::size_t i = 0; i < b.size(); ++i) {
                if (i != drop) {
                    e.push_back(b[i]);
                }
            }
            inside += edges.count(e) ? 1 : 0;
        }
        if (inside >= k) {
            free = false;
        }
    });
    return free;
}

/// Integral of exp(-x^m / m!) over [0, inf) by composite Simpson on [0, L],
/// where L is chosen so the integrand has fallen below e^-70.
inline long double quadrature_asympt(unsigned m, unsigned panels = 200000)
{
    long double fact = 1.0L;
    for (unsigned i = 2; i <= m; ++i) {
        fact *= i;
    }
    const long double L = std::pow(70.0L * fact, 1.0L / m);
    auto f = [&](long double x) { return std::exp(-std::pow(x, static_cast<long double>(m)) / fact); };
    const long double h = L / panels;
    long double s = f(0.0L) + f(L);
    for (unsigned i = 1; i < panels; ++i) {
        s += (i % 2 ? 4.0L : 2.0L) * f(i * h);
    }
    return s * h / 3.0L;
}

}  // namespace oracle
