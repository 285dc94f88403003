#pragma once

// Uniform hypergraphs and the exhaustive oracles that certify constructions:
// daisy-freeness, pair-covering, line graph, chromatic number, blow-up and
// vertex links.

#include "daisy/arith.hpp"
#include "daisy/combinations.hpp"
#include "daisy/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace daisy {

/// Thrown when an exact algorithm is asked to go beyond its documented
/// size limit (chromatic number, blow-up capacity, oracle feasibility).
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// r-uniform hypergraph on vertices 0..n-1. Edges are stored ascending and
/// kept in lexicographic order; two graphs are equal iff their edge sets are.
class UniformHypergraph {
public:
    UniformHypergraph(unsigned r, unsigned n) : r_(r), n_(n)
    {
        if (r < 1) {
            throw std::invalid_argument("edge size must be at least 1");
        }
        if (n < r) {
            throw std::invalid_argument("vertex count " + std::to_string(n) +
                                        " is smaller than edge size " + std::to_string(r));
        }
    }

    /// Validates and canonicalizes. Rejects out-of-range vertices, repeated
    /// vertices inside an edge, wrong edge sizes and duplicate edges.
    static UniformHypergraph from_edges(unsigned r, unsigned n,
                                        const std::vector<std::vector<Vertex>>& edges)
    {
        UniformHypergraph g(r, n);
        std::vector<Vertex> flat;
        flat.reserve(edges.size() * r);
        for (const auto& e : edges) {
            flat.insert(flat.end(), e.begin(), e.end());
            if (e.size() != r) {
                throw std::invalid_argument("edge of size " + std::to_string(e.size()) +
                                            " in a " + std::to_string(r) + "-graph");
            }
        }
        g.adopt(std::move(flat));
        return g;
    }

    /// Takes ownership of a flat array of |E|*r vertex indices. Each chunk of r
    /// is sorted, validated, and the edge list is put into canonical order.
    static UniformHypergraph from_flat(unsigned r, unsigned n, std::vector<Vertex> flat)
    {
        UniformHypergraph g(r, n);
        if (flat.size() % r != 0) {
            throw std::invalid_argument("flat edge array is not a multiple of r");
        }
        g.adopt(std::move(flat));
        return g;
    }

    unsigned r() const { return r_; }
    unsigned n() const { return n_; }
    std::size_t edge_count() const { return flat_.size() / r_; }
    bool empty() const { return flat_.empty(); }

    std::span<const Vertex> edge(std::size_t i) const
    {
        return std::span<const Vertex>(flat_).subspan(i * r_, r_);
    }

    std::vector<std::vector<Vertex>> edges() const
    {
        std::vector<std::vector<Vertex>> out;
        out.reserve(edge_count());
        for (std::size_t i = 0; i < edge_count(); ++i) {
            auto e = edge(i);
            out.emplace_back(e.begin(), e.end());
        }
        return out;
    }

    /// Binary search on the canonical order; `e` must be ascending.
    bool contains(std::span<const Vertex> e) const
    {
        if (e.size() != r_) {
            return false;
        }
        std::size_t lo = 0;
        std::size_t hi = edge_count();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            auto m = edge(mid);
            if (std::lexicographical_compare(m.begin(), m.end(), e.begin(), e.end())) {
                lo = mid + 1;
            }
            else {
                hi = mid;
            }
        }
        return lo < edge_count() && std::ranges::equal(edge(lo), e);
    }

    std::vector<std::size_t> degrees() const
    {
        std::vector<std::size_t> deg(n_, 0);
        for (Vertex v : flat_) {
            ++deg[v];
        }
        return deg;
    }

    std::span<const Vertex> flat() const { return flat_; }

    friend bool operator==(const UniformHypergraph&, const UniformHypergraph&) = default;

private:
    void adopt(std::vector<Vertex> flat)
    {
        const std::size_t m = flat.size() / r_;
        for (std::size_t i = 0; i < m; ++i) {
            auto first = flat.begin() + static_cast<std::ptrdiff_t>(i * r_);
            std::sort(first, first + r_);
            for (unsigned j = 0; j < r_; ++j) {
                if (first[j] >= n_) {
                    throw std::out_of_range("vertex " + std::to_string(first[j]) +
                                            " out of range [0," + std::to_string(n_) + ")");
                }
                if (j > 0 && first[j] == first[j - 1]) {
                    throw std::invalid_argument("repeated vertex " + std::to_string(first[j]) +
                                                " inside an edge");
                }
            }
        }

        std::vector<std::size_t> order(m);
        std::iota(order.begin(), order.end(), std::size_t{0});
        auto edge_at = [&](std::size_t i) {
            return std::span<const Vertex>(flat).subspan(i * r_, r_);
        };
        bool sorted = true;
        for (std::size_t i = 1; i < m && sorted; ++i) {
            auto a = edge_at(i - 1);
            auto b = edge_at(i);
            sorted = std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        }
        if (!sorted) {
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                auto ea = edge_at(a);
                auto eb = edge_at(b);
                return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
            });
            std::vector<Vertex> canonical;
            canonical.reserve(flat.size());
            for (std::size_t i : order) {
                auto e = edge_at(i);
                canonical.insert(canonical.end(), e.begin(), e.end());
            }
            flat.swap(canonical);
            for (std::size_t i = 1; i < m; ++i) {
                if (std::ranges::equal(edge_at(i - 1), edge_at(i))) {
                    throw std::invalid_argument("duplicate edge");
                }
            }
        }
        flat_ = std::move(flat);
    }

    unsigned r_;
    unsigned n_;
    std::vector<Vertex> flat_;
};

/// Simple undirected graph with a symmetric, irreflexive adjacency relation.
class SimpleGraph {
public:
    explicit SimpleGraph(unsigned n) : n_(n), adj_(n) {}

    void add_edge(unsigned a, unsigned b)
    {
        if (a >= n_ || b >= n_) {
            throw std::out_of_range("graph vertex out of range");
        }
        if (a == b) {
            throw std::invalid_argument("self-loops are not allowed");
        }
        if (!adjacent(a, b)) {
            adj_[a].insert(std::upper_bound(adj_[a].begin(), adj_[a].end(), b), b);
            adj_[b].insert(std::upper_bound(adj_[b].begin(), adj_[b].end(), a), a);
        }
    }

    unsigned n() const { return n_; }

    bool adjacent(unsigned a, unsigned b) const
    {
        return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
    }

    const std::vector<unsigned>& neighbors(unsigned v) const { return adj_[v]; }

    /// Edge list (a < b) in lexicographic order.
    std::vector<std::pair<unsigned, unsigned>> edges() const
    {
        std::vector<std::pair<unsigned, unsigned>> out;
        for (unsigned a = 0; a < n_; ++a) {
            for (unsigned b : adj_[a]) {
                if (a < b) {
                    out.emplace_back(a, b);
                }
            }
        }
        return out;
    }

    std::size_t edge_count() const
    {
        std::size_t twice = 0;
        for (const auto& nb : adj_) {
            twice += nb.size();
        }
        return twice / 2;
    }

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    unsigned n_;
    std::vector<std::vector<unsigned>> adj_;
};

/// An (r+1)-vertex set together with the edges of G it contains.
struct DaisyWitness {
    std::vector<Vertex> vertex_set;
    std::vector<std::vector<Vertex>> contained_edges;
};

struct DaisyCheck {
    bool free = true;
    std::optional<DaisyWitness> witness;

    explicit operator bool() const { return free; }
};

// ---------------------------------------------------------------------------
// Small named hypergraphs

inline UniformHypergraph complete_hypergraph(unsigned r, unsigned n)
{
    std::vector<Vertex> flat;
    flat.reserve(binomial_u64(n, r) * r);
    for_each_combination(n, r, [&](std::span<const Vertex> c) {
        flat.insert(flat.end(), c.begin(), c.end());
    });
    return UniformHypergraph::from_flat(r, n, std::move(flat));
}

/// H_k^r: r+1 vertices, the k edges that miss vertex r, r-1, ..., r-k+1.
inline UniformHypergraph daisy_hypergraph(unsigned r, unsigned k)
{
    if (k < 1 || k > r + 1) {
        throw std::invalid_argument("daisy needs 1 <= k <= r+1");
    }
    std::vector<std::vector<Vertex>> edges;
    for (unsigned i = 0; i < k; ++i) {
        std::vector<Vertex> e;
        for (Vertex v = 0; v <= r; ++v) {
            if (v != r - i) {
                e.push_back(v);
            }
        }
        edges.push_back(std::move(e));
    }
    return UniformHypergraph::from_edges(r, r + 1, edges);
}

inline SimpleGraph complete_graph(unsigned n)
{
    SimpleGraph g(n);
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = a + 1; b < n; ++b) {
            g.add_edge(a, b);
        }
    }
    return g;
}

inline SimpleGraph cycle_graph(unsigned n)
{
    SimpleGraph g(n);
    for (unsigned a = 0; a < n; ++a) {
        g.add_edge(a, (a + 1) % n);
    }
    return g;
}

/// A 2-graph viewed as a uniform hypergraph, for running the daisy oracle on
/// ordinary graphs.
inline UniformHypergraph as_hypergraph(const SimpleGraph& g)
{
    std::vector<Vertex> flat;
    for (auto [a, b] : g.edges()) {
        flat.push_back(a);
        flat.push_back(b);
    }
    return UniformHypergraph::from_flat(2, std::max(2u, g.n()), std::move(flat));
}

// ---------------------------------------------------------------------------
// Oracles

/// Number of edges of G contained in the vertex set B.
inline std::size_t induced_edge_count(const UniformHypergraph& g, std::span<const Vertex> subset)
{
    std::vector<bool> in(g.n(), false);
    for (Vertex v : subset) {
        if (v >= g.n()) {
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        }
        in[v] = true;
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto e = g.edge(i);
        if (std::ranges::all_of(e, [&](Vertex v) { return in[v]; })) {
            ++count;
        }
    }
    return count;
}

namespace detail {

/// Edge membership by colex rank: a dense bitset when C(n,r) is moderate,
/// otherwise a sorted rank array.
class EdgeIndex {
public:
    explicit EdgeIndex(const UniformHypergraph& g) : binom_(g.n(), g.r() + 1)
    {
        std::uint64_t total = binomial_u64(g.n(), g.r());
        if (total == std::numeric_limits<std::uint64_t>::max()) {
            throw LimitExceeded("C(n,r) does not fit in 64 bits; graph too large for the oracle");
        }
        dense_ = total <= (std::uint64_t{1} << 30);
        if (dense_) {
            bits_.assign(total / 64 + 1, 0);
        }
        else {
            ranks_.reserve(g.edge_count());
        }
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            std::uint64_t rk = colex_rank(g.edge(i), binom_);
            if (dense_) {
                bits_[rk / 64] |= std::uint64_t{1} << (rk % 64);
            }
            else {
                ranks_.push_back(rk);
            }
        }
        std::sort(ranks_.begin(), ranks_.end());
    }

    bool has(std::uint64_t rank) const
    {
        if (dense_) {
            return (bits_[rank / 64] >> (rank % 64)) & 1u;
        }
        return std::binary_search(ranks_.begin(), ranks_.end(), rank);
    }

    const BinomialTable& binom() const { return binom_; }

private:
    BinomialTable binom_;
    bool dense_ = true;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint64_t> ranks_;
};

}  // namespace detail

/// Exhaustive H_k^r-freeness check: every (r+1)-subset must induce at most
/// k-1 edges. Subsets are scanned in lexicographic order; the returned
/// witness is always the lexicographically first violating subset, whatever
/// the thread count. Practical up to about n = 40 for r <= 8.
inline DaisyCheck is_daisy_free(const UniformHypergraph& g, unsigned k, unsigned threads = 1)
{
    const unsigned r = g.r();
    const unsigned n = g.n();
    if (k < 2 || k > r + 1) {
        throw std::invalid_argument("daisy size k must satisfy 2 <= k <= r+1 (k=" +
                                    std::to_string(k) + ", r=" + std::to_string(r) + ")");
    }
    if (g.edge_count() < k || n < r + 1) {
        return {};
    }

    const detail::EdgeIndex index(g);
    const BinomialTable& binom = index.binom();
    const unsigned s = r + 1;
    const std::size_t tasks = n - s + 1;  // one task per smallest element

    std::vector<std::optional<std::vector<Vertex>>> found(tasks);
    std::atomic<std::size_t> first_hit{tasks};

    run_tasks(tasks, threads, [&](std::size_t task) {
        if (task > first_hit.load(std::memory_order_relaxed)) {
            return;
        }
        std::vector<std::uint64_t> prefix(s + 1);
        std::vector<std::uint64_t> suffix(s + 1);
        std::uint64_t visited = 0;
        for_each_combination_from(n, s, static_cast<unsigned>(task), [&](std::span<const Vertex> b) {
            if ((++visited & 0xfff) == 0 && task > first_hit.load(std::memory_order_relaxed)) {
                return false;
            }
            // rank(B \ {b_i}) = sum_{j<i} C(b_j, j+1) + sum_{j>i} C(b_j, j)
            prefix[0] = 0;
            for (unsigned j = 0; j < s; ++j) {
                prefix[j + 1] = prefix[j] + binom(b[j], j + 1);
            }
            suffix[s] = 0;
            for (unsigned j = s; j-- > 0;) {
                suffix[j] = suffix[j + 1] + binom(b[j], j);
            }
            unsigned hits = 0;
            for (unsigned i = 0; i < s; ++i) {
                if (index.has(prefix[i] + suffix[i + 1]) && ++hits >= k) {
                    found[task] = std::vector<Vertex>(b.begin(), b.end());
                    std::size_t cur = first_hit.load();
                    while (task < cur && !first_hit.compare_exchange_weak(cur, task)) {
                    }
                    return false;
                }
                if (hits + (s - 1 - i) < k) {
                    break;
                }
            }
            return true;
        });
    });

    for (auto& hit : found) {
        if (hit) {
            DaisyWitness w;
            w.vertex_set = *hit;
            std::vector<Vertex> sub(r);
            for (unsigned drop = s; drop-- > 0;) {
                std::size_t pos = 0;
                for (unsigned j = 0; j < s; ++j) {
                    if (j != drop) {
                        sub[pos++] = w.vertex_set[j];
                    }
                }
                if (g.contains(sub)) {
                    w.contained_edges.push_back(sub);
                }
            }
            return {false, std::move(w)};
        }
    }
    return {};
}

/// True iff every pair of vertices lies in a common edge.
inline bool is_pair_covering(const UniformHypergraph& g)
{
    const unsigned n = g.n();
    std::vector<bool> covered(static_cast<std::size_t>(n) * n, false);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto e = g.edge(i);
        for (std::size_t a = 0; a < e.size(); ++a) {
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                covered[e[a] * n + e[b]] = true;
            }
        }
    }
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = a + 1; b < n; ++b) {
            if (!covered[a * n + b]) {
                return false;
            }
        }
    }
    return true;
}

/// L(H): vertex i is the i-th edge of H in canonical order; two edges are
/// adjacent when they share exactly r-1 vertices.
inline SimpleGraph line_graph(const UniformHypergraph& h)
{
    const std::size_t m = h.edge_count();
    if (m > std::numeric_limits<unsigned>::max()) {
        throw LimitExceeded("too many edges for a line graph");
    }
    SimpleGraph out(static_cast<unsigned>(m));
    std::vector<Vertex> common;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            common.clear();
            auto ea = h.edge(a);
            auto eb = h.edge(b);
            std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                                  std::back_inserter(common));
            if (common.size() + 1 == h.r()) {
                out.add_edge(static_cast<unsigned>(a), static_cast<unsigned>(b));
            }
        }
    }
    return out;
}

inline constexpr unsigned chromatic_vertex_limit = 24;

/// Exact chromatic number by DSATUR-ordered branch and bound. Inputs above
/// 24 vertices are rejected rather than approximated.
inline unsigned chromatic_number(const SimpleGraph& g)
{
    const unsigned n = g.n();
    if (n > chromatic_vertex_limit) {
        throw LimitExceeded("chromatic_number is exact only up to " +
                            std::to_string(chromatic_vertex_limit) + " vertices (got " +
                            std::to_string(n) + ")");
    }
    if (n == 0) {
        return 0;
    }
    std::vector<std::uint32_t> adj(n, 0);
    for (unsigned v = 0; v < n; ++v) {
        for (unsigned u : g.neighbors(v)) {
            adj[v] |= std::uint32_t{1} << u;
        }
    }

    std::vector<int> color(n, -1);
    unsigned best = n;  // n colors always suffice

    auto search = [&](auto&& self, unsigned colored, unsigned used) -> void {
        if (used >= best) {
            return;
        }
        if (colored == n) {
            best = used;
            return;
        }
        // Pick the uncolored vertex with the most distinct neighbor colors,
        // breaking ties by degree then index.
        int pick = -1;
        int pick_sat = -1;
        int pick_deg = -1;
        std::uint32_t pick_forbidden = 0;
        for (unsigned v = 0; v < n; ++v) {
            if (color[v] >= 0) {
                continue;
            }
            std::uint32_t forbidden = 0;
            for (std::uint32_t nb = adj[v]; nb != 0; nb &= nb - 1) {
                int c = color[std::countr_zero(nb)];
                if (c >= 0) {
                    forbidden |= std::uint32_t{1} << c;
                }
            }
            int sat = std::popcount(forbidden);
            int deg = std::popcount(adj[v]);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = static_cast<int>(v);
                pick_sat = sat;
                pick_deg = deg;
                pick_forbidden = forbidden;
            }
        }
        for (unsigned c = 0; c < used; ++c) {
            if (!(pick_forbidden >> c & 1u)) {
                color[pick] = static_cast<int>(c);
                self(self, colored + 1, used);
                color[pick] = -1;
            }
        }
        if (used + 1 < best) {
            color[pick] = static_cast<int>(used);
            self(self, colored + 1, used + 1);
            color[pick] = -1;
        }
    };
    search(search, 0, 0);
    return best;
}

inline constexpr std::uint64_t default_edge_capacity = std::uint64_t{1} << 25;

/// Blow-up by a factor m: vertex (x, y) is encoded as x*m + y; edges take one
/// clone of each vertex of an edge of G. The result has m^r |E(G)| edges.
inline UniformHypergraph blow_up(const UniformHypergraph& g, unsigned m,
                                 std::uint64_t edge_capacity = default_edge_capacity)
{
    if (m < 1) {
        throw std::invalid_argument("blow-up factor must be at least 1");
    }
    const unsigned r = g.r();
    u128 per_edge = 1;
    for (unsigned i = 0; i < r && per_edge <= edge_capacity; ++i) {
        per_edge *= m;
    }
    u128 total = per_edge * g.edge_count();
    if (total > edge_capacity ||
        static_cast<std::uint64_t>(g.n()) * m > std::numeric_limits<Vertex>::max()) {
        throw LimitExceeded("blow-up would produce more than " + std::to_string(edge_capacity) +
                            " edges");
    }
    std::vector<Vertex> flat;
    flat.reserve(static_cast<std::size_t>(total) * r);
    std::vector<unsigned> clone(r, 0);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto e = g.edge(i);
        std::fill(clone.begin(), clone.end(), 0u);
        for (;;) {
            for (unsigned j = 0; j < r; ++j) {
                flat.push_back(e[j] * m + clone[j]);
            }
            unsigned j = r;
            while (j > 0 && clone[j - 1] + 1 == m) {
                clone[--j] = 0;
            }
            if (j == 0) {
                break;
            }
            ++clone[j - 1];
        }
    }
    return UniformHypergraph::from_flat(r, g.n() * m, std::move(flat));
}

/// Link of v: the (r-1)-graph on the other n-1 vertices (relabeled in order)
/// whose edges are the A with A + v an edge of G.
inline UniformHypergraph link_graph(const UniformHypergraph& g, Vertex v)
{
    if (g.r() < 2) {
        throw std::invalid_argument("link graph needs r >= 2");
    }
    if (v >= g.n()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    std::vector<Vertex> flat;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto e = g.edge(i);
        if (std::find(e.begin(), e.end(), v) == e.end()) {
            continue;
        }
        for (Vertex u : e) {
            if (u != v) {
                flat.push_back(u > v ? u - 1 : u);
            }
        }
    }
    return UniformHypergraph::from_flat(g.r() - 1, g.n() - 1, std::move(flat));
}

}  // namespace daisy
