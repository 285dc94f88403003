#pragma once

// Finite H_k^r-free constructions over Z_n: cyclic shift graphs G(n,r,t,j),
// residue-class graphs, the augmented blow-up, and the recursive 4-graph
// construction built from two disjoint copies.

#include "daisy/arith.hpp"
#include "daisy/combinations.hpp"
#include "daisy/hypergraph.hpp"
#include "daisy/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace daisy {

// ---------------------------------------------------------------------------
// Circular geometry of subsets of Z_n

/// d_t of an ascending subset of Z_n: the smallest span of t circularly
/// consecutive elements. Requires 2 <= t <= |a|. No allocation; this is the
/// inner loop of every exhaustive scan.
inline unsigned windowed_diameter_sorted(std::span<const Vertex> a, unsigned n, unsigned t)
{
    const std::size_t s = a.size();
    unsigned best = n;
    for (std::size_t i = 0; i < s; ++i) {
        std::size_t end = i + t - 1;
        unsigned span = end < s ? a[end] - a[i] : a[end - s] + n - a[i];
        best = std::min(best, span);
    }
    return best;
}

/// An ascending set of distinct residues mod n with its circular gaps.
class CyclicSubset {
public:
    CyclicSubset(unsigned n, std::vector<Vertex> elements) : n_(n), elements_(std::move(elements))
    {
        if (n == 0) {
            throw std::invalid_argument("modulus must be positive");
        }
        if (elements_.empty()) {
            throw std::invalid_argument("cyclic subset must be non-empty");
        }
        std::sort(elements_.begin(), elements_.end());
        if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
            throw std::invalid_argument("cyclic subset has repeated residues");
        }
        if (elements_.back() >= n) {
            throw std::out_of_range("residue out of range [0,n)");
        }
        const std::size_t s = elements_.size();
        gaps_.resize(s);
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < s; ++i) {
            Vertex next = elements_[(i + 1) % s];
            gaps_[i] = next > elements_[i] ? next - elements_[i] : next + n - elements_[i];
            sum += elements_[i];
        }
        sum_mod_n_ = static_cast<unsigned>(sum % n);
    }

    unsigned n() const { return n_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Vertex>& elements() const { return elements_; }
    /// gaps()[i] is the step from element i to element i+1 (cyclically).
    const std::vector<unsigned>& gaps() const { return gaps_; }
    unsigned sum_mod_n() const { return sum_mod_n_; }

private:
    unsigned n_;
    std::vector<Vertex> elements_;
    std::vector<unsigned> gaps_;
    unsigned sum_mod_n_ = 0;
};

/// d(A): length of the shortest directed path through all of A.
inline unsigned diameter(const CyclicSubset& a)
{
    if (a.size() < 2) {
        return 0;
    }
    return a.n() - *std::max_element(a.gaps().begin(), a.gaps().end());
}

/// d_t(A): minimum diameter over t-element subsets, via the window sweep.
inline unsigned windowed_diameter(const CyclicSubset& a, unsigned t)
{
    if (t < 2 || t > a.size()) {
        throw std::invalid_argument("windowed diameter needs 2 <= t <= |A|");
    }
    return windowed_diameter_sorted(a.elements(), a.n(), t);
}

// ---------------------------------------------------------------------------
// Shift graphs G(n, r, t, j)

struct ShiftParams {
    unsigned n = 0;
    unsigned r = 0;
    unsigned t = 0;
    unsigned j = 0;

    void validate() const
    {
        if (r < 3 || r >= n) {
            throw std::invalid_argument("shift graph needs 3 <= r < n (n=" + std::to_string(n) +
                                        ", r=" + std::to_string(r) + ")");
        }
        if (t < 2 || t > r) {
            throw std::invalid_argument("shift graph needs 2 <= t <= r");
        }
        if (j >= n) {
            throw std::invalid_argument("shift j must lie in [0,n)");
        }
    }
};

/// All r-subsets A of Z_n with (j + sum A) mod n <= d_t(A).
inline UniformHypergraph build_shift_graph(const ShiftParams& params,
                                           std::uint64_t budget = default_enumeration_budget,
                                           unsigned threads = 1)
{
    params.validate();
    const auto [n, r, t, j] = params;
    check_budget(n, r, budget, "build_shift_graph");

    const std::size_t tasks = n - r + 1;
    std::vector<std::vector<Vertex>> parts(tasks);
    run_tasks(tasks, threads, [&, n = n, r = r, t = t, j = j](std::size_t first) {
        auto& out = parts[first];
        for_each_combination_from(n, r, static_cast<unsigned>(first), [&](std::span<const Vertex> a) {
            unsigned sum = j;
            for (Vertex v : a) {
                sum += v;
            }
            if (sum % n <= windowed_diameter_sorted(a, n, t)) {
                out.insert(out.end(), a.begin(), a.end());
            }
        });
    });
    std::vector<Vertex> flat;
    for (auto& p : parts) {
        flat.insert(flat.end(), p.begin(), p.end());
    }
    return UniformHypergraph::from_flat(r, n, std::move(flat));
}

/// Joint histogram of (sum A mod n, d_t(A)) over all r-subsets of Z_n.
/// hist[s * (n + 1) + d] counts subsets with sum residue s and d_t = d.
struct ShiftHistogram {
    unsigned n = 0;
    unsigned r = 0;
    unsigned t = 0;
    std::vector<std::uint64_t> hist;

    std::uint64_t at(unsigned residue, unsigned d) const { return hist[residue * (n + 1) + d]; }
};

inline ShiftHistogram shift_histogram(unsigned n, unsigned r, unsigned t,
                                      std::uint64_t budget = default_enumeration_budget,
                                      unsigned threads = 1)
{
    ShiftParams{n, r, t, 0}.validate();
    check_budget(n, r, budget, "shift_histogram");

    const std::size_t cells = static_cast<std::size_t>(n) * (n + 1);
    const std::size_t tasks = n - r + 1;
    std::vector<std::vector<std::uint64_t>> parts(tasks);
    run_tasks(tasks, threads, [&](std::size_t first) {
        auto& h = parts[first];
        h.assign(cells, 0);
        for_each_combination_from(n, r, static_cast<unsigned>(first), [&](std::span<const Vertex> a) {
            unsigned sum = 0;
            for (Vertex v : a) {
                sum += v;
            }
            ++h[(sum % n) * (n + 1) + windowed_diameter_sorted(a, n, t)];
        });
    });
    ShiftHistogram out{n, r, t, std::vector<std::uint64_t>(cells, 0)};
    for (const auto& h : parts) {
        for (std::size_t c = 0; c < cells; ++c) {
            out.hist[c] += h[c];
        }
    }
    return out;
}

struct ShiftProfile {
    unsigned n = 0;
    unsigned r = 0;
    unsigned t = 0;
    std::vector<std::uint64_t> counts;  ///< |E(G(n,r,t,j))| for j = 0..n-1
    Rational average;
    unsigned best_j = 0;                 ///< smallest j attaining the maximum
    std::uint64_t best_count = 0;
};

inline ShiftProfile shift_profile_from_histogram(const ShiftHistogram& h)
{
    const unsigned n = h.n;
    ShiftProfile p{n, h.r, h.t, std::vector<std::uint64_t>(n, 0), Rational(0), 0, 0};
    // A with residue s and d_t = d is an edge of G(j) iff (j + s) mod n <= d.
    for (unsigned s = 0; s < n; ++s) {
        for (unsigned d = 0; d <= n; ++d) {
            std::uint64_t c = h.at(s, d);
            if (c == 0) {
                continue;
            }
            for (unsigned u = 0; u <= d && u < n; ++u) {
                p.counts[(u + n - s) % n] += c;
            }
        }
    }
    Integer total(0);
    for (unsigned j = 0; j < n; ++j) {
        total += from_u64(p.counts[j]);
        if (p.counts[j] > p.best_count) {
            p.best_count = p.counts[j];
            p.best_j = j;
        }
    }
    p.average = Rational(total, Integer(n));
    p.average.canonicalize();
    return p;
}

/// Edge counts of G(n,r,t,j) for every j from a single pass over C(n,r)
/// subsets, with their exact mean and the best shift (ties: smallest j).
inline ShiftProfile shift_edge_profile(unsigned n, unsigned r, unsigned t,
                                       std::uint64_t budget = default_enumeration_budget,
                                       unsigned threads = 1)
{
    return shift_profile_from_histogram(shift_histogram(n, r, t, budget, threads));
}

// ---------------------------------------------------------------------------
// Residue classes E_j = { A : sum A = j mod n }

inline std::vector<std::uint64_t> residue_class_sizes(unsigned n, unsigned r,
                                                      std::uint64_t budget = default_enumeration_budget)
{
    if (r < 1 || r > n) {
        throw std::invalid_argument("residue classes need 1 <= r <= n");
    }
    check_budget(n, r, budget, "residue_class_sizes");
    std::vector<std::uint64_t> sizes(n, 0);
    for_each_combination(n, r, [&](std::span<const Vertex> a) {
        std::uint64_t sum = 0;
        for (Vertex v : a) {
            sum += v;
        }
        ++sizes[sum % n];
    });
    return sizes;
}

/// The `count` largest residue classes (ties broken toward smaller residues),
/// returned ascending.
inline std::vector<unsigned> best_residue_classes(unsigned n, unsigned r, unsigned count,
                                                  std::uint64_t budget = default_enumeration_budget)
{
    if (count > n) {
        throw std::invalid_argument("cannot pick more residue classes than n");
    }
    auto sizes = residue_class_sizes(n, r, budget);
    std::vector<unsigned> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](unsigned a, unsigned b) { return sizes[a] > sizes[b]; });
    order.resize(count);
    std::sort(order.begin(), order.end());
    return order;
}

/// All r-subsets of Z_n whose element sum mod n lies in `classes`.
inline UniformHypergraph residue_class_graph(unsigned n, unsigned r, const std::vector<unsigned>& classes,
                                             std::uint64_t budget = default_enumeration_budget)
{
    if (r < 1 || r > n) {
        throw std::invalid_argument("residue class graph needs 1 <= r <= n");
    }
    std::vector<bool> wanted(n, false);
    for (unsigned c : classes) {
        if (c >= n) {
            throw std::invalid_argument("residue " + std::to_string(c) + " not in Z_" + std::to_string(n));
        }
        wanted[c] = true;
    }
    check_budget(n, r, budget, "residue_class_graph");
    std::vector<Vertex> flat;
    for_each_combination(n, r, [&](std::span<const Vertex> a) {
        std::uint64_t sum = 0;
        for (Vertex v : a) {
            sum += v;
        }
        if (wanted[sum % n]) {
            flat.insert(flat.end(), a.begin(), a.end());
        }
    });
    return UniformHypergraph::from_flat(r, n, std::move(flat));
}

// ---------------------------------------------------------------------------
// Augmented blow-up

/// Graph on Z_n x [t] (vertex (x, y) encoded as x*t + y) whose edges are
///  (i)  r-sets whose projection is an edge of G (one vertex per fiber), and
///  (ii) r-sets meeting at most r-2 fibers with sum of projections = j mod n.
/// Sets meeting exactly r-1 fibers are never edges.
inline UniformHypergraph augmented_blowup(const UniformHypergraph& g, unsigned t, unsigned j,
                                          std::uint64_t budget = default_enumeration_budget,
                                          unsigned threads = 1)
{
    const unsigned n = g.n();
    const unsigned r = g.r();
    if (t < 2) {
        throw std::invalid_argument("augmented blow-up needs t >= 2");
    }
    if (j >= n) {
        throw std::invalid_argument("residue j must lie in [0,n)");
    }
    const unsigned total = n * t;
    check_budget(total, r, budget, "augmented_blowup");

    UniformHypergraph base = blow_up(g, t);
    std::vector<Vertex> flat(base.flat().begin(), base.flat().end());

    if (r >= 3) {
        const std::size_t tasks = total - r + 1;
        std::vector<std::vector<Vertex>> parts(tasks);
        run_tasks(tasks, threads, [&](std::size_t first) {
            auto& out = parts[first];
            for_each_combination_from(total, r, static_cast<unsigned>(first), [&](std::span<const Vertex> a) {
                unsigned fibers = 0;
                std::uint64_t sum = 0;
                Vertex prev = total;
                for (Vertex v : a) {
                    Vertex x = v / t;
                    fibers += x != prev;
                    prev = x;
                    sum += x;
                }
                if (fibers + 2 <= r && sum % n == j) {
                    out.insert(out.end(), a.begin(), a.end());
                }
            });
        });
        for (auto& p : parts) {
            flat.insert(flat.end(), p.begin(), p.end());
        }
    }
    return UniformHypergraph::from_flat(r, total, std::move(flat));
}

// ---------------------------------------------------------------------------
// Recursive 4-graph: two disjoint copies plus every 4-set split 2 + 2

inline UniformHypergraph h44_recursive_graph(unsigned s)
{
    if (s < 1 || s > 4) {
        throw std::invalid_argument("h44 recursion depth must be in [1,4]");
    }
    std::vector<Vertex> flat = {0, 1, 2, 3};
    unsigned v = 4;
    for (unsigned level = 1; level < s; ++level) {
        std::vector<Vertex> next;
        next.reserve(2 * flat.size() + 4 * binomial_u64(v, 2) * binomial_u64(v, 2));
        next.insert(next.end(), flat.begin(), flat.end());
        for (Vertex x : flat) {
            next.push_back(x + v);
        }
        for (Vertex a = 0; a < v; ++a) {
            for (Vertex b = a + 1; b < v; ++b) {
                for (Vertex c = 0; c < v; ++c) {
                    for (Vertex d = c + 1; d < v; ++d) {
                        next.insert(next.end(), {a, b, c + v, d + v});
                    }
                }
            }
        }
        flat = std::move(next);
        v *= 2;
    }
    return UniformHypergraph::from_flat(4, v, std::move(flat));
}

}  // namespace daisy
