#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vbplab/copies.hpp"
#include "vbplab/generators.hpp"

using namespace vbplab;

namespace {

Graph single() { return gen_empty(1); }
Graph k2() { return gen_complete(2); }

CopiesColoring from_rows(int t, std::vector<std::vector<ColorId>> rows)
{
    CopiesColoring f(static_cast<int>(rows.size()), t);
    for (std::size_t v = 0; v < rows.size(); ++v)
        for (int k = 1; k <= t; ++k)
            f.at(static_cast<Vertex>(v + 1), k) = rows[v][static_cast<std::size_t>(k - 1)];
    return f;
}

} // namespace

TEST(BlowUp, Examples)
{
    EXPECT_EQ(blow_up_explicit(CopiesInstance(single(), 4)), gen_complete(4));
    EXPECT_EQ(blow_up_explicit(CopiesInstance(k2(), 3)), gen_complete(6));
    Graph p3t2 = blow_up_explicit(CopiesInstance(gen_path(3), 2));
    EXPECT_EQ(p3t2.n(), 6);
    // one K2 per vertex (3 edges) plus a K_{2,2} per base edge (2 * 4 edges)
    EXPECT_EQ(p3t2.m(), 11u);
}

TEST(BlowUp, EdgeCountFormula)
{
    for (std::uint64_t s = 0; s < 30; ++s) {
        Graph g = gen_gnp(1 + static_cast<int>(s % 6), 0.5, s);
        for (int t = 1; t <= 4; ++t) {
            auto m = blow_up_explicit(CopiesInstance(g, t)).m();
            EXPECT_EQ(m, static_cast<std::size_t>(g.n() * t * (t - 1) / 2) + g.m() * static_cast<std::size_t>(t * t));
        }
    }
}

TEST(ValidateCopiesColoring, Examples)
{
    CopiesInstance k2t2(k2(), 2);
    EXPECT_TRUE(validate_copies_coloring(k2t2, from_rows(2, {{1, 2}, {3, 4}})));
    EXPECT_FALSE(validate_copies_coloring(k2t2, from_rows(2, {{1, 2}, {1, 4}})));
    CopiesInstance e2t2(gen_empty(2), 2);
    EXPECT_TRUE(validate_copies_coloring(e2t2, from_rows(2, {{1, 2}, {1, 2}})));
    EXPECT_FALSE(validate_copies_coloring(e2t2, from_rows(2, {{1, 1}, {1, 2}})));
    EXPECT_THROW(validate_copies_coloring(k2t2, CopiesColoring(2, 2)), InputError);
}

TEST(ColorClass, Examples)
{
    CopiesInstance k2t1(k2(), 1);
    auto f = from_rows(1, {{1}, {2}});
    EXPECT_EQ(color_class_vertices(k2t1, f, 1), (VertexSet{1}));
    EXPECT_TRUE(color_class_vertices(k2t1, f, 9).empty());
    CopiesInstance e3(gen_empty(3), 1);
    EXPECT_EQ(color_class_vertices(e3, from_rows(1, {{1}, {1}, {1}}), 1), (VertexSet{1, 2, 3}));
}

TEST(FractionalFromCopies, Examples)
{
    CopiesInstance k2t1(k2(), 1);
    auto fc = fractional_coloring_from_copies(k2t1, from_rows(1, {{1}, {2}}));
    EXPECT_EQ(fc.value, Rational(2));
    EXPECT_EQ(fc.weights.at({1}), Rational(1));
    EXPECT_EQ(fc.weights.at({2}), Rational(1));

    CopiesInstance one(single(), 3);
    auto f1 = fractional_coloring_from_copies(one, from_rows(3, {{1, 2, 3}}));
    EXPECT_EQ(f1.value, Rational(1));
    EXPECT_EQ(f1.weights.at({1}), Rational(1));  // three 1/3 weights on {v} accumulate

    CopiesInstance c5t2(gen_cycle(5), 2);
    auto exact = chromatic_number_copies_exact(c5t2);
    auto fc5 = fractional_coloring_from_copies(c5t2, exact.witness);
    EXPECT_EQ(fc5.value, Rational(5, 2));
    EXPECT_TRUE(validate_fractional_coloring(c5t2.base, fc5));

    EXPECT_THROW(fractional_coloring_from_copies(k2t1, from_rows(1, {{1}, {1}})), InputError);
}

TEST(ChromaticCopies, Examples)
{
    EXPECT_EQ(chromatic_number_copies_exact(CopiesInstance(k2(), 3)).chi, 6);
    EXPECT_EQ(chromatic_number_copies_exact(CopiesInstance(single(), 5)).chi, 5);
    auto c5 = chromatic_number_copies_exact(CopiesInstance(gen_cycle(5), 2));
    EXPECT_EQ(c5.chi, 5);
    EXPECT_TRUE(validate_copies_coloring(CopiesInstance(gen_cycle(5), 2), c5.witness));
    // brute force on the 10-vertex blow-up: 4 colors do not suffice
    EXPECT_FALSE(oracle::k_colorable_brute(blow_up_explicit(CopiesInstance(gen_cycle(5), 2)), 4));
    EXPECT_THROW(chromatic_number_copies_exact(CopiesInstance(gen_cycle(6), 3)), ResourceLimitError);
}

TEST(GreedyCcp, Examples)
{
    EXPECT_EQ(greedy_online_ccp(CopiesInstance(single(), 3)), from_rows(3, {{1, 2, 3}}));
    EXPECT_EQ(greedy_online_ccp(CopiesInstance(gen_empty(2), 2)), from_rows(2, {{1, 2}, {1, 2}}));
    EXPECT_EQ(greedy_online_ccp(CopiesInstance(k2(), 2)), from_rows(2, {{1, 2}, {3, 4}}));
}

TEST(Sandwich, Examples)
{
    auto c5 = check_sandwich(CopiesInstance(gen_cycle(5), 2));
    EXPECT_EQ(c5.chi_f, Rational(5, 2));
    EXPECT_EQ(c5.chi_t_over_t, Rational(5, 2));
    EXPECT_EQ(c5.chi, 3);
    EXPECT_TRUE(c5.holds);

    auto k3 = check_sandwich(CopiesInstance(gen_complete(3), 2));
    EXPECT_EQ(k3.chi_f, Rational(3));
    EXPECT_EQ(k3.chi_t_over_t, Rational(3));
    EXPECT_TRUE(k3.holds);

    auto e4 = check_sandwich(CopiesInstance(gen_empty(4), 3));
    EXPECT_EQ(e4.chi_f, Rational(1));
    EXPECT_EQ(e4.chi_t_over_t, Rational(1));
    EXPECT_EQ(e4.chi, 1);
    EXPECT_TRUE(e4.holds);
}

// Both constructive directions on random small graphs: the product coloring
// shows chi(G^t) <= t chi(G); the extraction shows chi_f(G) <= chi(G^t)/t.
TEST(Sandwich, ConstructiveDirectionsProperty)
{
    for (std::uint64_t s = 0; s < 60; ++s) {
        Graph g = gen_gnp(1 + static_cast<int>(s % 5), 0.5, 77 + s);
        auto chi = chromatic_number_exact(g);
        auto chi_f = fractional_chromatic_exact(g).chi_f;
        for (int t = 1; t <= 3; ++t) {
            CopiesInstance inst(g, t);
            auto prod = product_coloring(inst, chi.witness);
            ASSERT_TRUE(validate_copies_coloring(inst, prod));
            EXPECT_EQ(prod.distinct_colors().size(), static_cast<std::size_t>(t * chi.chi));

            auto exact = chromatic_number_copies_exact(inst);
            EXPECT_LE(exact.chi, t * chi.chi);
            auto fc = fractional_coloring_from_copies(inst, exact.witness);
            EXPECT_TRUE(validate_fractional_coloring(g, fc));
            EXPECT_EQ(fc.value, Rational(exact.chi, t));
            EXPECT_LE(chi_f, fc.value);
            if (t == 1) {
                EXPECT_EQ(exact.chi, chi.chi);
            }

            for (ColorId r : exact.witness.distinct_colors())
                EXPECT_TRUE(is_independent_set(g, color_class_vertices(inst, exact.witness, r)));
        }
    }
}

TEST(GreedyCcp, AlwaysValidProperty)
{
    for (std::uint64_t s = 0; s < 100; ++s) {
        CopiesInstance inst(gen_gnp(1 + static_cast<int>(s % 12), 0.4, s), 1 + static_cast<int>(s % 7));
        auto f = greedy_online_ccp(inst);
        EXPECT_TRUE(validate_copies_coloring(inst, f));
        auto fc = fractional_coloring_from_copies(inst, f);
        EXPECT_EQ(fc.value, Rational(static_cast<std::int64_t>(f.distinct_colors().size()), inst.t));
    }
}
