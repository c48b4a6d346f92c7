#include <gtest/gtest.h>

#include <cmath>

#include "vbplab/generators.hpp"
#include "vbplab/pool_simulation.hpp"
#include "vbplab/reductions.hpp"

using namespace vbplab;

namespace {

auto greedy_factory = [](int n, int t) { return GreedyCcp(n, t); };

} // namespace

TEST(SamplingProbability, Values)
{
    EXPECT_EQ(sampling_probability(1, 5), 1.0);
    EXPECT_EQ(sampling_probability(16, 2), 1.0);  // 2 ln 16 > 2, clamped
    EXPECT_NEAR(sampling_probability(10, 100), 0.04605170185988092, 1e-15);
    EXPECT_THROW(sampling_probability(0, 1), InputError);
    EXPECT_THROW(sampling_probability(3, 0), InputError);
}

TEST(SamplePool, DegenerateProbabilities)
{
    PoolState s;
    s.p = 1.0;
    auto all = sample_pool(s, {3, 1, 2});
    EXPECT_EQ(all.pool, (std::set<ColorId>{1, 2, 3}));
    EXPECT_EQ(all.colors_used_by_a, (std::set<ColorId>{1, 2, 3}));

    s.p = 0.0;
    auto none = sample_pool(s, {1, 2, 3});
    EXPECT_TRUE(none.pool.empty());
    EXPECT_EQ(none.colors_used_by_a.size(), 3u);

    EXPECT_THROW(sample_pool(all, {2}), InputError);
}

// One draw per new color in ascending order: the pool equals the set of colors
// whose draw from the same stream falls below p.
TEST(SamplePool, MatchesIndependentDraws)
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        PoolState s;
        s.p = 0.5;
        s.rng = CounterRng(seed);
        auto out = sample_pool(s, {7, 2, 5, 2, 9});
        CounterRng replay(seed);
        std::set<ColorId> expect;
        for (ColorId r : {2, 5, 7, 9})
            if (replay.uniform01() < 0.5)
                expect.insert(r);
        EXPECT_EQ(out.pool, expect);
    }
}

TEST(SamplePool, PinnedSeed)
{
    PoolState s;
    s.p = 0.5;
    s.rng = CounterRng(42);
    EXPECT_EQ(sample_pool(s, {1, 2, 3, 4, 5, 6}).pool, (std::set<ColorId>{2, 3, 4, 5}));
}

TEST(AlgorithmB, CertainPoolNeverFails)
{
    for (std::uint64_t s = 0; s < 30; ++s) {
        Graph g = gen_gnp(8, 0.4, s);
        auto run = run_algorithm_b(g, GreedyCcp(8, 3), 3, s, 1.0);
        EXPECT_EQ(run.stats.fails, 0u);
        for (std::size_t i = 0; i < run.steps.size(); ++i) {
            auto lo = *std::min_element(run.steps[i].copy_colors.begin(), run.steps[i].copy_colors.end());
            EXPECT_EQ(run.coloring[i], (PoolColor{lo, false}));
        }
        EXPECT_TRUE(validate_coloring<PoolColor>(g, std::span<const PoolColor>(run.coloring)));
    }
}

TEST(AlgorithmB, SingleVertex)
{
    auto run = run_algorithm_b(gen_empty(1), GreedyCcp(1, 4), 4, 0);
    EXPECT_EQ(run.state.p, 1.0);
    EXPECT_EQ(run.coloring, (std::vector<PoolColor>{{1, false}}));
    EXPECT_EQ(run.stats.colors_b, 1u);
}

TEST(AlgorithmB, EmptyPoolFailsEveryStep)
{
    auto run = run_algorithm_b(gen_path(4), GreedyCcp(4, 2), 2, 0, 0.0);
    EXPECT_EQ(run.stats.fails, 4u);
    EXPECT_EQ(run.state.fail_steps, (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(run.coloring[2].str(), "s:3");
    EXPECT_EQ(run.stats.colors_b, 4u);
}

TEST(AlgorithmB, CrownRegression)
{
    auto run = run_algorithm_b(gen_crown(3), GreedyCcp(6, 64), 64, 42);
    EXPECT_EQ(run.stats.colors_b, 3u);
    EXPECT_EQ(run.stats.fails, 0u);
    auto again = run_algorithm_b(gen_crown(3), GreedyCcp(6, 64), 64, 42);
    EXPECT_EQ(run.coloring, again.coloring);
}

TEST(AlgorithmB, FeasibleAndAccountedProperty)
{
    for (std::uint64_t s = 0; s < 200; ++s) {
        int n = 2 + static_cast<int>(s % 9);
        int t = 1 + static_cast<int>(s % 7);
        Graph g = gen_gnp(n, 0.5, s);
        auto run = run_algorithm_b(g, GreedyCcp(n, t), t, s * 31 + 1);
        auto rec = detail::audit_run(g, run, s);
        EXPECT_TRUE(rec.feasible) << s;
        EXPECT_TRUE(rec.accounting_ok) << s;
        EXPECT_TRUE(rec.fail_iff_miss_ok) << s;
        EXPECT_TRUE(rec.classes_ok) << s;
        EXPECT_LE(run.stats.pool_size, run.stats.colors_a);
    }
}

TEST(AlgorithmB, WorksOverVbpBackedInner)
{
    Graph g = gen_crown(4);
    auto run = run_algorithm_b(g, vbp_algorithm_to_ccp_algorithm(FirstFit{}, 8, 8), 8, 3);
    EXPECT_TRUE(validate_coloring<PoolColor>(g, std::span<const PoolColor>(run.coloring)));
}

TEST(AlgorithmB, RejectsInvalidInner)
{
    struct SameColor {
        std::vector<ColorId> color_copies(const OnlineVertexEvent&) { return {1, 2}; }
    };
    EXPECT_THROW(run_algorithm_b(gen_path(2), SameColor{}, 2, 0), ProtocolError);

    struct Repeats {
        std::vector<ColorId> color_copies(const OnlineVertexEvent& e) { return {e.id, e.id}; }
    };
    EXPECT_THROW(run_algorithm_b(gen_empty(1), Repeats{}, 2, 0), ProtocolError);

    struct ShortList {
        std::vector<ColorId> color_copies(const OnlineVertexEvent& e) { return {e.id}; }
    };
    EXPECT_THROW(run_algorithm_b(gen_empty(1), ShortList{}, 3, 0), ProtocolError);
}

TEST(FailBound, Values)
{
    auto r = fail_probability_bound(10, 100);
    EXPECT_NEAR(r.p, 0.04605170185988092, 1e-15);
    EXPECT_NEAR(r.per_step_fail, 0.00896362657319783, 1e-15);
    EXPECT_TRUE(r.bound_holds);

    auto crown = fail_probability_bound(16, 64);
    EXPECT_NEAR(crown.p, 0.0866434, 1e-7);
    EXPECT_NEAR(crown.per_step_fail, 0.0030268, 1e-7);
    EXPECT_NEAR(crown.union_bound, 0.0484, 1e-4);

    auto clamped = fail_probability_bound(16, 2);
    EXPECT_EQ(clamped.per_step_fail, 0.0);
    EXPECT_THROW(fail_probability_bound(1, 5), InputError);
}

// (1 - p)^t <= exp(-p t) = 1/n^2 whenever p < 1.
TEST(FailBound, HoldsOnGridProperty)
{
    for (int n = 2; n <= 4096; n = n * 3 / 2 + 1)
        for (int t = 1; t <= 20000; t = t * 2 + 1) {
            auto r = fail_probability_bound(n, t);
            EXPECT_TRUE(r.bound_holds) << n << " " << t;
            if (r.p < 1.0) {
                EXPECT_LE(r.per_step_fail, std::exp(-r.p * t) * (1 + 1e-12));
            }
        }
}

TEST(ColorBound, Values)
{
    auto r = expected_colors_bound(Rational(2), Rational(4), 16, 12, 3);
    EXPECT_NEAR(r.proof_bound, 36.119457148370564, 1e-9);
    EXPECT_NEAR(r.simplified_bound, 36.27106466687737, 1e-9);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(adapter_copies(Rational(4), 16), 12);
    EXPECT_EQ(adapter_copies(Rational(1), 1), 1);
    EXPECT_THROW(expected_colors_bound(Rational(2), Rational(4), 16, 11, 2), InputError);
}

TEST(MonteCarlo, SingleTrialAndCertainPool)
{
    auto one = monte_carlo_verify(gen_cycle(5), greedy_factory, 3, 1, 9);
    EXPECT_EQ(one.trials, 1u);
    EXPECT_EQ(one.sd_colors_b, 0.0);
    EXPECT_EQ(one.infeasible, 0u);

    // t small enough that p = 1: B uses exactly the min colors, no fails.
    auto sure = monte_carlo_verify(gen_crown(3), greedy_factory, 2, 20, 1);
    EXPECT_EQ(sure.p, 1.0);
    EXPECT_EQ(sure.empirical_fail_rate, 0.0);
    EXPECT_EQ(sure.sd_colors_b, 0.0);
    EXPECT_TRUE(sure.pass);
}

TEST(MonteCarlo, DeterministicAcrossJobs)
{
    auto a = monte_carlo_verify(gen_crown(4), greedy_factory, 16, 64, 77, 1);
    auto b = monte_carlo_verify(gen_crown(4), greedy_factory, 16, 64, 77, 4);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        EXPECT_EQ(a.records[i].seed, b.records[i].seed);
        EXPECT_EQ(a.records[i].colors_b, b.records[i].colors_b);
        EXPECT_EQ(a.records[i].fails, b.records[i].fails);
    }
    EXPECT_EQ(a.mean_colors_b, b.mean_colors_b);
    EXPECT_TRUE(a.pass);
}
