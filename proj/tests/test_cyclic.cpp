#include "daisy/continuous.hpp"
#include "daisy/counts.hpp"
#include "daisy/cyclic.hpp"
#include "daisy/bounds.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace daisy;

namespace {

std::set<oracle::Set> as_set(const UniformHypergraph& g)
{
    std::set<oracle::Set> out;
    for (const auto& e : g.edges()) {
        out.insert(oracle::Set(e.begin(), e.end()));
    }
    return out;
}

}  // namespace

TEST(CyclicSubset, Gaps)
{
    CyclicSubset a(12, {5, 0, 1});
    EXPECT_EQ(a.elements(), (std::vector<Vertex>{0, 1, 5}));
    EXPECT_EQ(a.gaps(), (std::vector<unsigned>{1, 4, 7}));
    EXPECT_EQ(a.sum_mod_n(), 6u);
    EXPECT_THROW(CyclicSubset(5, {1, 1}), std::invalid_argument);
    EXPECT_THROW(CyclicSubset(5, {5}), std::out_of_range);
    EXPECT_THROW(CyclicSubset(5, {}), std::invalid_argument);
}

TEST(Diameter, Examples)
{
    EXPECT_EQ(diameter(CyclicSubset(12, {0, 1, 5})), 5u);
    EXPECT_EQ(diameter(CyclicSubset(12, {7})), 0u);
    EXPECT_EQ(diameter(CyclicSubset(3, {0, 1, 2})), 2u);
}

TEST(WindowedDiameter, Examples)
{
    EXPECT_EQ(windowed_diameter(CyclicSubset(12, {0, 1, 5}), 2), 1u);
    EXPECT_EQ(windowed_diameter(CyclicSubset(5, {0, 2, 4}), 2), 1u);
    EXPECT_EQ(windowed_diameter(CyclicSubset(12, {0, 1, 5}), 3), 5u);
    EXPECT_THROW(windowed_diameter(CyclicSubset(12, {0, 1, 5}), 4), std::invalid_argument);
    EXPECT_THROW(windowed_diameter(CyclicSubset(12, {0, 1, 5}), 1), std::invalid_argument);
}

TEST(WindowedDiameter, WindowSweepEqualsSubsetMinimum)
{
    for (unsigned n = 3; n <= 12; ++n) {
        for (unsigned r = 2; r <= std::min(7u, n); ++r) {
            for_each_combination(n, r, [&](std::span<const Vertex> a) {
                oracle::Set s(a.begin(), a.end());
                ASSERT_EQ(diameter(CyclicSubset(n, {a.begin(), a.end()})), oracle::brute_diameter(s, n));
                for (unsigned t = 2; t <= r; ++t) {
                    ASSERT_EQ(windowed_diameter_sorted(a, n, t), oracle::brute_windowed(s, n, t))
                        << "n=" << n << " r=" << r << " t=" << t;
                }
            });
        }
    }
}

TEST(WindowedDiameter, BoundedByShare)
{
    for (unsigned n = 4; n <= 13; ++n) {
        for (unsigned r = 2; r <= std::min(6u, n); ++r) {
            for (unsigned t = 2; t <= r; ++t) {
                for_each_combination(n, r, [&](std::span<const Vertex> a) {
                    ASSERT_LE(windowed_diameter_sorted(a, n, t) * r, (t - 1) * n);
                });
            }
        }
    }
}

TEST(ShiftGraph, SmallExample)
{
    auto g = build_shift_graph({5, 3, 2, 0});
    EXPECT_EQ(g, UniformHypergraph::from_edges(3, 5, {{0, 1, 4}, {0, 2, 3}, {0, 2, 4}, {1, 2, 3}}));
    for (unsigned j = 0; j < 5; ++j) {
        EXPECT_EQ(build_shift_graph({5, 3, 2, j}).edge_count(), 4u);
    }
}

TEST(ShiftGraph, RejectsBadParams)
{
    EXPECT_THROW(build_shift_graph({5, 6, 2, 0}), std::invalid_argument);
    EXPECT_THROW(build_shift_graph({5, 5, 2, 0}), std::invalid_argument);
    EXPECT_THROW(build_shift_graph({5, 2, 2, 0}), std::invalid_argument);
    EXPECT_THROW(build_shift_graph({5, 3, 4, 0}), std::invalid_argument);
    EXPECT_THROW(build_shift_graph({5, 3, 2, 5}), std::invalid_argument);
    EXPECT_THROW(build_shift_graph({60, 30, 2, 0}, 1000), BudgetExceeded);
}

TEST(ShiftGraph, MatchesOracleAndPigeonhole)
{
    for (unsigned n = 5; n <= 10; ++n) {
        for (unsigned r = 3; r < n && r <= 5; ++r) {
            for (unsigned t = 2; t <= 3 && t <= r; ++t) {
                for (unsigned j = 0; j < n; ++j) {
                    auto g = build_shift_graph({n, r, t, j});
                    ASSERT_EQ(as_set(g), oracle::brute_shift_graph(n, r, t, j));
                    EXPECT_GE(g.edge_count(), oracle::pascal64(n, r) / n);
                }
            }
        }
    }
}

TEST(ShiftGraph, ThreadCountInvariant)
{
    EXPECT_EQ(build_shift_graph({13, 5, 3, 4}, default_enumeration_budget, 1),
              build_shift_graph({13, 5, 3, 4}, default_enumeration_budget, 3));
}

TEST(ShiftGraph, DaisyFreeForSmallParameters)
{
    for (unsigned n = 5; n <= 11; ++n) {
        for (unsigned r = 3; r <= 5 && r < n; ++r) {
            for (unsigned k = 3; k <= 4; ++k) {
                for (unsigned j = 0; j < n; ++j) {
                    auto g = build_shift_graph({n, r, k - 1, j});
                    ASSERT_TRUE(is_daisy_free(g, k).free) << n << "," << r << "," << k << "," << j;
                }
            }
        }
    }
}

TEST(ShiftGraph, TranslationCovariance)
{
    for (auto [n, r] : {std::pair{7u, 3u}, {8u, 3u}, {9u, 4u}}) {
        for (unsigned j = 0; j < n; ++j) {
            auto g = build_shift_graph({n, r, 2, j});
            for (unsigned c = 1; c < n; ++c) {
                auto h = build_shift_graph({n, r, 2, static_cast<unsigned>((j + n * r - r * c) % n)});
                for (const auto& e : g.edges()) {
                    std::vector<Vertex> moved;
                    for (Vertex v : e) {
                        moved.push_back((v + c) % n);
                    }
                    std::sort(moved.begin(), moved.end());
                    ASSERT_TRUE(h.contains(moved));
                }
                ASSERT_EQ(g.edge_count(), h.edge_count());
            }
        }
    }
}

TEST(ShiftProfile, CoprimeShiftsHaveEqualCounts)
{
    for (auto [n, r] : {std::pair{5u, 3u}, {7u, 3u}, {8u, 3u}}) {
        auto p = shift_edge_profile(n, r, 2);
        for (auto c : p.counts) {
            EXPECT_EQ(c, p.counts[0]);
        }
    }
    auto p5 = shift_edge_profile(5, 3, 2);
    EXPECT_EQ(p5.counts, (std::vector<std::uint64_t>{4, 4, 4, 4, 4}));
    EXPECT_EQ(p5.average, 4);
    EXPECT_EQ(p5.best_j, 0u);
    EXPECT_EQ(p5.best_count, 4u);
}

TEST(ShiftProfile, CountsMatchBuiltGraphs)
{
    for (auto [n, r, t] : {std::tuple{9u, 3u, 2u}, {10u, 4u, 2u}, {10u, 4u, 3u}, {12u, 4u, 2u}}) {
        auto p = shift_edge_profile(n, r, t);
        std::uint64_t best = 0;
        unsigned best_j = 0;
        for (unsigned j = 0; j < n; ++j) {
            std::uint64_t c = build_shift_graph({n, r, t, j}).edge_count();
            ASSERT_EQ(p.counts[j], c);
            if (c > best) {
                best = c;
                best_j = j;
            }
        }
        EXPECT_EQ(p.best_j, best_j);
        EXPECT_EQ(p.best_count, best);
    }
}

TEST(ShiftProfile, AverageIsMeanOfN)
{
    for (unsigned n = 5; n <= 13; ++n) {
        for (unsigned r = 3; r <= 5 && r < n; ++r) {
            for (unsigned t = 2; t <= 3; ++t) {
                auto p = shift_edge_profile(n, r, t);
                CountTable table = count_table(n, r, t, CountMethod::Brute);
                Rational mean(table.sum(), Integer(n));
                mean.canonicalize();
                ASSERT_EQ(p.average, mean) << n << "," << r << "," << t;
            }
        }
    }
}

TEST(ResidueClasses, Examples)
{
    auto sizes = residue_class_sizes(7, 3);
    for (auto s : sizes) {
        EXPECT_EQ(s, 5u);
    }
    auto best = best_residue_classes(7, 3, 2);
    ASSERT_EQ(best.size(), 2u);
    EXPECT_EQ(residue_class_graph(7, 3, best).edge_count(), 10u);
    EXPECT_EQ(residue_class_graph(7, 3, {}).edge_count(), 0u);
    std::vector<unsigned> all(7);
    std::iota(all.begin(), all.end(), 0u);
    EXPECT_EQ(residue_class_graph(7, 3, all), complete_hypergraph(3, 7));
}

TEST(ResidueClasses, ChromaticBoundAchieved)
{
    // H_3^3 has chi(L(H)) = 3, so two classes must reach (2/7) C(7,3) = 10.
    auto rep = bound_chrom(7, 3, daisy_hypergraph(3, 3));
    auto g = residue_class_graph(7, 3, best_residue_classes(7, 3, 2));
    EXPECT_GE(Rational(Integer(static_cast<unsigned long>(g.edge_count()))), rep.value);
    EXPECT_TRUE(is_daisy_free(g, 3).free);
}

TEST(AugmentedBlowup, SmallExample)
{
    auto base = build_shift_graph({5, 3, 2, 0});
    for (unsigned j = 0; j < 5; ++j) {
        auto g = augmented_blowup(base, 2, j);
        EXPECT_EQ(g.n(), 10u);
        EXPECT_EQ(g.edge_count(), 32u);
        EXPECT_TRUE(is_daisy_free(g, 3).free);
    }
    EXPECT_EQ(bound_T3(Integer(4), 5, 3, 3).value, 32);
}

TEST(AugmentedBlowup, TypeTwoEdgesOnly)
{
    auto g = augmented_blowup(UniformHypergraph(4, 5), 2, 0);
    EXPECT_EQ(g.edge_count(), 2u);
    // Fibres {x, y} with 2(x + y) = 0 mod 5: {1,4} and {2,3}.
    EXPECT_TRUE(g.contains(std::vector<Vertex>{2, 3, 8, 9}));
    EXPECT_TRUE(g.contains(std::vector<Vertex>{4, 5, 6, 7}));
}

TEST(AugmentedBlowup, AverageEqualsT3)
{
    for (auto [n, r] : {std::pair{5u, 3u}, {6u, 3u}, {7u, 3u}, {6u, 4u}}) {
        auto base = build_shift_graph({n, r, 2, 0});
        Integer total(0);
        for (unsigned j = 0; j < n; ++j) {
            total += Integer(static_cast<unsigned long>(augmented_blowup(base, 2, j).edge_count()));
        }
        Rational avg(total, Integer(n));
        avg.canonicalize();
        EXPECT_EQ(avg, bound_T3(Integer(static_cast<unsigned long>(base.edge_count())), n, r, 3).value)
            << n << "," << r;
    }
}

TEST(AugmentedBlowup, Guards)
{
    auto base = build_shift_graph({5, 3, 2, 0});
    EXPECT_THROW(augmented_blowup(base, 1, 0), std::invalid_argument);
    EXPECT_THROW(augmented_blowup(base, 2, 5), std::invalid_argument);
    EXPECT_THROW(augmented_blowup(base, 2, 0, 10), BudgetExceeded);
}

TEST(H44, RecurrenceAndFreeness)
{
    unsigned long e = 1;
    unsigned long v = 4;
    for (unsigned s = 1; s <= 3; ++s) {
        auto g = h44_recursive_graph(s);
        EXPECT_EQ(g.n(), v);
        EXPECT_EQ(g.edge_count(), e);
        EXPECT_TRUE(is_daisy_free(g, 4).free) << s;
        unsigned long pairs = v * (v - 1) / 2;
        e = 2 * e + pairs * pairs;
        v *= 2;
    }
    EXPECT_EQ(h44_recursive_graph(2).edge_count(), 38u);
    EXPECT_EQ(h44_recursive_graph(3).edge_count(), 860u);
    EXPECT_THROW(h44_recursive_graph(0), std::invalid_argument);
    EXPECT_THROW(h44_recursive_graph(5), std::invalid_argument);
}

TEST(Continuous, DegenerateSample)
{
    auto at_zero = classify_circle_points({0.0, 0.0, 0.0}, 2);
    EXPECT_EQ(at_zero.delta_t, 0.0);
    EXPECT_EQ(at_zero.phase, 0.0);
    EXPECT_TRUE(at_zero.is_edge);
    auto shifted = classify_circle_points({0.3, 0.3, 0.3}, 2);
    EXPECT_EQ(shifted.delta_t, 0.0);
    EXPECT_FALSE(shifted.is_edge);
}

TEST(Continuous, MinWindowWrapsAround)
{
    std::vector<double> pts{0.05, 0.5, 0.95};
    EXPECT_NEAR(min_window_arc(pts, 2), 0.1, 1e-12);
    EXPECT_NEAR(min_window_arc(pts, 3), 0.55, 1e-12);
    EXPECT_THROW(min_window_arc(pts, 4), std::invalid_argument);
}

TEST(Continuous, StreamsAreReproducible)
{
    StreamRng a(42, 3);
    StreamRng b(42, 3);
    StreamRng c(42, 4);
    for (int i = 0; i < 10; ++i) {
        double x = a.uniform();
        EXPECT_EQ(x, b.uniform());
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 1.0);
    }
    EXPECT_NE(a.uniform(), c.uniform());
}

TEST(Continuous, EdgeRatesMatchClosedForms)
{
    auto two = continuous_edge_frequency(3, 2, 200000, 11);
    EXPECT_NEAR(two.mean, 1.0 / 9.0, 4 * two.stderr_of_mean());
    auto all = continuous_edge_frequency(3, 3, 200000, 12);
    EXPECT_NEAR(all.mean, 7.0 / 18.0, 4 * all.stderr_of_mean());
}

TEST(Continuous, FrequencyIndependentOfThreads)
{
    auto one = continuous_edge_frequency(4, 3, 50000, 5, 1);
    auto three = continuous_edge_frequency(4, 3, 50000, 5, 3);
    EXPECT_EQ(one.count, three.count);
    EXPECT_EQ(one.mean, three.mean);
    EXPECT_EQ(one.m2, three.m2);
}

TEST(Continuous, SampledGraphsAreDaisyFree)
{
    for (unsigned r : {3u, 4u}) {
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            StreamRng rng(seed, r);
            std::vector<double> pts(10);
            for (double& p : pts) {
                p = rng.uniform();
            }
            for (unsigned t = 2; t <= r; ++t) {
                auto g = induced_continuous_graph(pts, r, t);
                EXPECT_TRUE(is_daisy_free(g, t + 1).free) << "r=" << r << " t=" << t << " seed=" << seed;
            }
        }
    }
}
