#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace zetaforge;

namespace {

PartiallyDirectedGraph worked_example()
{
    PartiallyDirectedGraph g(2);
    g.add_edge(0, 1).add_arrow(1, 0).add_edge(1, 1);
    return g;
}

std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

} // namespace

TEST(Darts, EdgesGiveInversePairsArrowsGiveSingles)
{
    const auto ds = darts(worked_example());
    ASSERT_EQ(ds.size(), 5u);
    std::size_t with_inverse = 0;
    for (const auto& d : ds) {
        if (d.inverse) {
            ++with_inverse;
            EXPECT_EQ(ds[*d.inverse].inverse, d.id);
            EXPECT_EQ(ds[*d.inverse].tail, d.head);
        }
    }
    EXPECT_EQ(with_inverse, 4u);
}

TEST(Darts, BranchingBounds)
{
    const auto b = dart_branching(cycle_graph(4));
    EXPECT_EQ(b.min_successors, 1u);
    EXPECT_EQ(b.max_successors, 1u);
    const auto leaf = dart_branching(PartiallyDirectedGraph(2, {{0, 1}}, {}));
    EXPECT_EQ(leaf.min_successors, 0u);
}

TEST(CountClosedPaths, SpecExamples)
{
    EXPECT_EQ(count_closed_paths(cycle_graph(3), 6).counts, ints({0, 0, 6, 0, 0, 6}));
    EXPECT_EQ(count_closed_paths(worked_example(), 4).counts, ints({2, 4, 8, 12}));
    EXPECT_EQ(count_closed_paths(PartiallyDirectedGraph(2, {{0, 1}}, {}), 6).counts, ints({0, 0, 0, 0, 0, 0}));
}

TEST(CountClosedPaths, HorizonGuard)
{
    EXPECT_THROW(count_closed_paths(cycle_graph(3), 0), precondition_error);
    EXPECT_THROW(count_closed_paths(cycle_graph(3), 13), precondition_error);
    EXPECT_NO_THROW(count_closed_paths(cycle_graph(3), 12));
}

TEST(CountClosedPaths, MatchesBruteForceAndSeries)
{
    std::mt19937 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = normalize(oracle::random_graph(rng, 6, 8));
        const auto n = count_closed_paths(g, 6);
        EXPECT_EQ(n.counts, oracle::brute_closed_counts(g, 6)) << "trial " << trial;
        EXPECT_EQ(n, log_derivative_series(zeta_inverse(g), 6)) << "trial " << trial;
    }
}

TEST(EnumeratePrimes, SpecExamples)
{
    const auto a2 = enumerate_primes(cycle_graph(3), 6);
    EXPECT_EQ(a2.pi, ints({0, 0, 2, 0, 0, 0}));
    EXPECT_EQ(a2.delta, 3u);
    EXPECT_EQ(a2.closed.counts, ints({0, 0, 6, 0, 0, 6}));

    const PartiallyDirectedGraph clover(1, {{0, 0}, {0, 0}, {0, 0}}, {});
    EXPECT_EQ(enumerate_primes(clover, 1).pi, ints({6}));

    const auto tree = enumerate_primes(PartiallyDirectedGraph(4, {{0, 1}, {1, 2}, {1, 3}}, {}), 5);
    EXPECT_EQ(tree.pi, ints({0, 0, 0, 0, 0}));
    EXPECT_EQ(tree.delta, 0u);
}

TEST(EnumeratePrimes, OrientationReversalIsADifferentPrime)
{
    // a single 4-cycle has exactly two primes of length 4: one per direction
    EXPECT_EQ(enumerate_primes(cycle_graph(4), 4).pi, ints({0, 0, 0, 2}));
}

TEST(EnumeratePrimes, MobiusInversionAgrees)
{
    std::mt19937 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = normalize(oracle::random_graph(rng, 5, 7));
        const auto census = enumerate_primes(g, 6);
        EXPECT_EQ(mobius_invert(census.closed), census.pi);
        EXPECT_EQ(census.closed, count_closed_paths(g, 6));
        for (std::size_t m = 1; m <= 6; ++m)
            if (census.delta == 0 || m % census.delta != 0) {
                EXPECT_EQ(census.pi[m - 1], 0);
            }
    }
}

TEST(PntRatios, SpecExamples)
{
    const auto a2 = enumerate_primes(cycle_graph(3), 6);
    const auto r = pnt_ratios(a2, 1.0);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0].first, 3u);
    EXPECT_DOUBLE_EQ(r[0].second, 2.0);
    EXPECT_DOUBLE_EQ(r[1].second, 0.0);

    PartiallyDirectedGraph dp0(3);
    dp0.add_arrow(0, 1, 3).add_arrow(1, 2, 3).add_arrow(2, 0, 3);
    const auto c = enumerate_primes(dp0, 6);
    EXPECT_EQ(c.delta, 3u);
    EXPECT_EQ(c.pi[2], 27);
    EXPECT_NEAR(pnt_ratios(c, 1.0 / 3.0)[0].second, 1.0, 1e-12);

    const auto tree = enumerate_primes(PartiallyDirectedGraph(2, {{0, 1}}, {}), 3);
    EXPECT_THROW(pnt_ratios(tree, 1.0), precondition_error);
}
