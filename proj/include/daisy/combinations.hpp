#pragma once

// Subset enumeration in lexicographic order and colex ranking.

#include "daisy/arith.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace daisy {

using Vertex = std::uint32_t;

/// Thrown when an exhaustive enumeration would exceed its subset budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t default_enumeration_budget = 100'000'000;

inline void check_budget(std::uint64_t n, std::uint64_t k, std::uint64_t budget,
                         const char* what)
{
    std::uint64_t count = binomial_u64(n, k);
    if (count > budget) {
        throw BudgetExceeded(std::string(what) + ": C(" + std::to_string(n) + "," +
                             std::to_string(k) + ") subsets exceed the enumeration budget of " +
                             std::to_string(budget));
    }
}

/// Pascal table of 64-bit binomials C(a, b) for a <= max_n, b <= max_k.
class BinomialTable {
public:
    BinomialTable(unsigned max_n, unsigned max_k)
        : cols_(max_k + 1), table_((max_n + 1) * (max_k + 1), 0)
    {
        for (unsigned a = 0; a <= max_n; ++a) {
            at(a, 0) = 1;
            for (unsigned b = 1; b <= max_k && b <= a; ++b) {
                at(a, b) = at(a - 1, b - 1) + (b <= a - 1 ? at(a - 1, b) : 0);
            }
        }
    }

    std::uint64_t operator()(unsigned a, unsigned b) const
    {
        return b < cols_ && (a * cols_ + b) < table_.size() ? table_[a * cols_ + b] : 0;
    }

private:
    std::uint64_t& at(unsigned a, unsigned b) { return table_[a * cols_ + b]; }

    unsigned cols_;
    std::vector<std::uint64_t> table_;
};

/// Colex rank of an ascending subset: sum over i of C(s_i, i+1).
inline std::uint64_t colex_rank(std::span<const Vertex> subset, const BinomialTable& binom)
{
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        rank += binom(subset[i], static_cast<unsigned>(i + 1));
    }
    return rank;
}

namespace detail {

template <class Fn>
bool invoke_visitor(Fn& fn, std::span<const Vertex> subset)
{
    if constexpr (std::is_same_v<std::invoke_result_t<Fn&, std::span<const Vertex>>, bool>) {
        return fn(subset);
    }
    else {
        fn(subset);
        return true;
    }
}

}  // namespace detail

/// Visits every k-subset of {0..n-1} whose smallest element is `first`, in
/// lexicographic order. The visitor may return false to stop early; the
/// function returns false iff it was stopped.
template <class Fn>
bool for_each_combination_from(unsigned n, unsigned k, unsigned first, Fn&& fn)
{
    if (k == 0 || first + k > n) {
        return true;
    }
    std::vector<Vertex> c(k);
    c[0] = first;
    for (unsigned i = 1; i < k; ++i) {
        c[i] = first + i;
    }
    for (;;) {
        if (!detail::invoke_visitor(fn, std::span<const Vertex>(c))) {
            return false;
        }
        // Advance the tail c[1..k-1]; c[0] stays fixed.
        int i = static_cast<int>(k) - 1;
        while (i >= 1 && c[i] == n - k + i) {
            --i;
        }
        if (i < 1) {
            return true;
        }
        ++c[i];
        for (unsigned j = i + 1; j < k; ++j) {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// Visits every k-subset of {0..n-1} in lexicographic order.
template <class Fn>
bool for_each_combination(unsigned n, unsigned k, Fn&& fn)
{
    if (k == 0) {
        std::vector<Vertex> empty;
        return detail::invoke_visitor(fn, std::span<const Vertex>(empty));
    }
    for (unsigned first = 0; first + k <= n; ++first) {
        if (!for_each_combination_from(n, k, first, fn)) {
            return false;
        }
    }
    return true;
}

}  // namespace daisy
