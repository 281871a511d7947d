#include "cutfacet/error.hpp"
#include "cutfacet/gh_pair.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace cutfacet;

namespace {

ErrorCode code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode{};
}

/// k=3, t=1: V_1={1,4}, V_2={2}, V_3={3}.
GHPair small_pair()
{
    return validate_gh(Graph(4, {{1, 2}, {3, 4}, {2, 3}}), build_H(3, 1));
}

} // namespace

TEST(BuildH, Shape)
{
    const auto h = build_H(5, 2);
    EXPECT_EQ(h.node_count(), 7);
    EXPECT_TRUE(h.has_edge(1, 6));
    EXPECT_TRUE(h.has_edge(2, 7));
    EXPECT_EQ(h.edge_count(), 2U);
    EXPECT_EQ(code_of([] { build_H(2, 3); }), ErrorCode::BadParameters);
}

TEST(GHPair, Components)
{
    const auto p = small_pair();
    EXPECT_EQ(p.k(), 3);
    EXPECT_EQ(p.t(), 1);
    EXPECT_EQ(p.component(1), (std::vector<Node>{1, 4}));
    EXPECT_EQ(p.component_of(4), 1);
    EXPECT_TRUE(p.is_singleton(2));
    EXPECT_EQ(p.cross_edge(3, 1), (Edge{3, 4}));
    EXPECT_EQ(p.cross_endpoint(1, 3), 4);
    EXPECT_EQ(p.cross_endpoint(3, 1), 3);
    EXPECT_TRUE(p.in_hkt_form());
}

TEST(GHPair, ValidationErrors)
{
    const Graph h = build_H(3, 1);
    EXPECT_EQ(code_of([&] { validate_gh(Graph(4, {{1, 2}, {2, 3}}), h); }), ErrorCode::EdgeCountMismatch);
    EXPECT_EQ(code_of([&] { validate_gh(Graph(4, {{1, 4}, {2, 3}, {1, 2}}), h); }), ErrorCode::IntraComponentEdge);
    EXPECT_EQ(code_of([&] { validate_gh(Graph(4, {{1, 2}, {2, 4}, {2, 3}}), h); }), ErrorCode::DuplicateCrossEdge);
    EXPECT_EQ(code_of([&] { validate_gh(Graph(4, {{1, 2}, {3, 4}, {2, 3}}), Graph(4, {{1, 4}, {1, 2}})); }),
              ErrorCode::MatchingViolation);
    EXPECT_EQ(code_of([&] { validate_gh(Graph(4, {{1, 2}, {3, 4}, {2, 3}}), Graph(5, {})); }),
              ErrorCode::InvalidArgument);
}

TEST(GHPair, DoubledPairLeavesAnotherMissing)
{
    // With the right edge count, a missing pair implies a doubled one, reported first.
    const Graph h(5, {{4, 5}});
    EXPECT_EQ(code_of([&] { validate_gh(Graph(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {3, 4}}), h); }),
              ErrorCode::DuplicateCrossEdge);
    EXPECT_NO_THROW(validate_gh(Graph(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 4}, {2, 5}}), h));
}

TEST(GHPair, RelabelToHkt)
{
    // Matching on 2-5 and 1-3; singleton 4.
    const auto p = validate_gh(Graph(5, {{2, 1}, {3, 4}, {5, 4}}), Graph(5, {{2, 5}, {1, 3}}));
    EXPECT_FALSE(p.in_hkt_form());
    const auto r = relabel_to_hkt(p);
    EXPECT_TRUE(r.pair.in_hkt_form());
    EXPECT_EQ(r.pair.k(), 3);
    // {1,3} first (smaller endpoint 1): 1->1, 3->4; {2,5}: 2->2, 5->5; 4->3.
    EXPECT_EQ(r.perm(1), 1);
    EXPECT_EQ(r.perm(3), 4);
    EXPECT_EQ(r.perm(2), 2);
    EXPECT_EQ(r.perm(5), 5);
    EXPECT_EQ(r.perm(4), 3);
    EXPECT_EQ(r.pair, permute(p, r.perm));
}

TEST(GHPair, RandomRelabelKeepsStructure)
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> nd(3, 10);
        const int n = nd(rng);
        std::uniform_int_distribution<int> td(0, n / 2);
        const auto p = oracle::random_pair(rng, n, td(rng));
        const auto r = relabel_to_hkt(p);
        EXPECT_TRUE(r.pair.in_hkt_form());
        EXPECT_EQ(r.pair.k(), p.k());
        EXPECT_EQ(r.pair.t(), p.t());
        for (const auto& e : p.g().edges())
            EXPECT_TRUE(r.pair.g().has_edge(r.perm(e.u), r.perm(e.v)));
    }
}

TEST(Cycle4, Basics)
{
    // K_4 with no matching: any 4 distinct nodes.
    const auto p = validate_gh(Graph::complete(4), Graph(4));
    const Cycle4 c(p, {1, 2, 3, 4});
    EXPECT_EQ(c.opposite(1), 3);
    EXPECT_EQ(c.opposite(4), 2);
    EXPECT_EQ(c.position(3), 3);
    EXPECT_TRUE(c.contains(2));
    EXPECT_EQ(code_of([&] { c.opposite(5); }), ErrorCode::NotOnCycle);
    EXPECT_EQ(code_of([&] { Cycle4(p, {1, 2, 2, 4}); }), ErrorCode::NotACycle);
}

TEST(Cycle4, NeedsEdgesAndDistinctComponents)
{
    const auto p = small_pair();
    EXPECT_EQ(code_of([&] { Cycle4(p, {1, 2, 3, 4}); }), ErrorCode::NotACycle);
}

TEST(CyclicAdd, Wraps)
{
    EXPECT_EQ(cyclic_add(1, 1), 2);
    EXPECT_EQ(cyclic_add(3, 1), 4);
    EXPECT_EQ(cyclic_add(4, 1), 1);
    EXPECT_EQ(cyclic_add(3, 3), 2);
    EXPECT_EQ(cyclic_add(2, 2), 4);
}
