#pragma once

// The continuous construction G_{r,t} on the unit-circumference circle and
// the seeded, splittable random streams used by every Monte Carlo routine.
//
// Positions are fractions of the circumference in [0,1). An r-set A is an
// edge when (sum of positions mod 1) <= Delta_t(A), the shortest arc
// containing t of its points, both measured in circumference fractions.

#include "daisy/combinations.hpp"
#include "daisy/hypergraph.hpp"
#include "daisy/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace daisy {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of substream `index` under `master`; a pure function of both.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index)
{
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/// One reproducible random stream. Doubles are built from the top 53 bits so
/// the sequence does not depend on the standard library's distributions.
class StreamRng {
public:
    StreamRng(std::uint64_t master, std::uint64_t index)
        : master_(master), index_(index), engine_(substream_seed(master, index))
    {
    }

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::uint64_t master() const { return master_; }
    std::uint64_t index() const { return index_; }

private:
    std::uint64_t master_;
    std::uint64_t index_;
    std::mt19937_64 engine_;
};

/// Sorted circle positions plus the stream they came from.
struct CirclePointSample {
    std::vector<double> positions;
    std::uint64_t master_seed = 0;
    std::uint64_t stream = 0;
};

/// Shortest arc (circumference fraction) containing t of the sorted points.
inline double min_window_arc(std::span<const double> sorted, unsigned t)
{
    const std::size_t s = sorted.size();
    if (t < 2 || t > s) {
        throw std::invalid_argument("window size t must satisfy 2 <= t <= number of points");
    }
    double best = 1.0;
    for (std::size_t i = 0; i < s; ++i) {
        std::size_t end = i + t - 1;
        double span = end < s ? sorted[end] - sorted[i] : sorted[end - s] + 1.0 - sorted[i];
        best = std::min(best, span);
    }
    return best;
}

struct ContinuousEdge {
    CirclePointSample sample;
    double delta_t = 0.0;  ///< shortest arc holding t points
    double phase = 0.0;    ///< (sum of positions) mod 1
    bool is_edge = false;
};

/// Evaluates the edge rule on given positions (any order, duplicates allowed
/// here so degenerate configurations can be examined directly).
inline ContinuousEdge classify_circle_points(std::vector<double> positions, unsigned t)
{
    std::sort(positions.begin(), positions.end());
    ContinuousEdge out;
    out.delta_t = min_window_arc(positions, t);
    double sum = 0.0;
    for (double p : positions) {
        sum += p;
    }
    out.phase = sum - std::floor(sum);
    out.is_edge = out.phase <= out.delta_t;
    out.sample.positions = std::move(positions);
    return out;
}

/// Draws r i.i.d. uniform points (resampling the rare draw with a repeated
/// position) and classifies them.
inline ContinuousEdge sample_continuous_edge(unsigned r, unsigned t, StreamRng& rng)
{
    if (t < 2 || t > r) {
        throw std::invalid_argument("continuous edge sampling needs 2 <= t <= r");
    }
    std::vector<double> pts(r);
    for (;;) {
        for (double& p : pts) {
            p = rng.uniform();
        }
        std::sort(pts.begin(), pts.end());
        if (std::adjacent_find(pts.begin(), pts.end()) == pts.end()) {
            break;
        }
    }
    ContinuousEdge out = classify_circle_points(std::move(pts), t);
    out.sample.master_seed = rng.master();
    out.sample.stream = rng.index();
    return out;
}

/// Finite piece of G_{r,t}: vertex i is points[i]; every r-subset satisfying
/// the edge rule becomes an edge.
inline UniformHypergraph induced_continuous_graph(std::span<const double> points, unsigned r, unsigned t)
{
    const unsigned n = static_cast<unsigned>(points.size());
    std::vector<Vertex> flat;
    std::vector<double> chosen(r);
    for_each_combination(n, r, [&](std::span<const Vertex> a) {
        for (unsigned i = 0; i < r; ++i) {
            chosen[i] = points[a[i]];
        }
        if (classify_circle_points(chosen, t).is_edge) {
            flat.insert(flat.end(), a.begin(), a.end());
        }
    });
    return UniformHypergraph::from_flat(r, n, std::move(flat));
}

// ---------------------------------------------------------------------------
// Deterministic block-parallel Monte Carlo

/// Running mean/variance (Welford), mergeable in a fixed order.
struct MeanAccumulator {
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x)
    {
        ++count;
        double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }

    void merge(const MeanAccumulator& o)
    {
        if (o.count == 0) {
            return;
        }
        if (count == 0) {
            *this = o;
            return;
        }
        double total = static_cast<double>(count + o.count);
        double delta = o.mean - mean;
        mean += delta * static_cast<double>(o.count) / total;
        m2 += o.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(o.count) / total;
        count += o.count;
    }

    double variance() const { return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0; }
    double stderr_of_mean() const
    {
        return count > 1 ? std::sqrt(variance() / static_cast<double>(count)) : 0.0;
    }
};

inline constexpr std::uint64_t monte_carlo_block = 1 << 14;

/// Splits `samples` into fixed-size blocks; block b draws from substream b.
/// The result is independent of the worker count.
template <class Draw>
MeanAccumulator block_monte_carlo(std::uint64_t samples, std::uint64_t seed, unsigned threads, Draw draw)
{
    const std::uint64_t blocks = (samples + monte_carlo_block - 1) / monte_carlo_block;
    std::vector<MeanAccumulator> parts(blocks);
    run_tasks(blocks, threads, [&](std::size_t b) {
        StreamRng rng(seed, b);
        std::uint64_t begin = b * monte_carlo_block;
        std::uint64_t end = std::min(samples, begin + monte_carlo_block);
        MeanAccumulator acc;
        for (std::uint64_t i = begin; i < end; ++i) {
            acc.add(draw(rng));
        }
        parts[b] = acc;
    });
    MeanAccumulator out;
    for (const auto& p : parts) {
        out.merge(p);
    }
    return out;
}

/// Fraction of sampled r-sets that are edges of G_{r,t}.
inline MeanAccumulator continuous_edge_frequency(unsigned r, unsigned t, std::uint64_t samples,
                                                 std::uint64_t seed, unsigned threads = 1)
{
    return block_monte_carlo(samples, seed, threads, [r, t](StreamRng& rng) {
        return sample_continuous_edge(r, t, rng).is_edge ? 1.0 : 0.0;
    });
}

}  // namespace daisy
