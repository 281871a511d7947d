#include "cutfacet/error.hpp"
#include "cutfacet/inequality.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace cutfacet;

TEST(CutSet, CanonicalDropsLastNode)
{
    const auto s = CutSet::from_members(5, std::vector<Node>{2, 5});
    EXPECT_EQ(s.canonical().members(), (std::vector<Node>{1, 3, 4}));
    EXPECT_EQ(s.complement().complement(), s);
    EXPECT_TRUE(s.contains(5));
    EXPECT_FALSE(s.contains(6));
    const auto t = CutSet::from_members(5, std::vector<Node>{1, 3});
    EXPECT_EQ(t.canonical(), t);
}

TEST(CutSet, RejectsOutOfRangeMembers)
{
    EXPECT_THROW(CutSet::from_members(3, std::vector<Node>{4}), Error);
    EXPECT_THROW(CutSet(3, 0b1000), Error);
}

TEST(LinearInequality, CutFormCoefficients)
{
    auto ineq = LinearInequality::cut_form(4);
    EXPECT_EQ(ineq.ambient_dim(), 6U);
    ineq.set_edge_coeff(3, 1, 5);
    ineq.add_edge_coeff(1, 3, -2);
    EXPECT_EQ(ineq.edge_coeff(1, 3), 3);
    EXPECT_EQ(ineq.edge_terms().size(), 1U);
    EXPECT_THROW(ineq.set_node_coeff(1, 1), Error);
}

TEST(LinearInequality, SparseSupportRejectsNonEdges)
{
    auto ineq = LinearInequality::cut_form(Graph(3, {{1, 2}, {2, 3}}));
    EXPECT_EQ(ineq.ambient_dim(), 2U);
    EXPECT_EQ(ineq.edge_coeff(1, 3), 0);
    EXPECT_NO_THROW(ineq.set_edge_coeff(1, 3, 0));
    try {
        ineq.set_edge_coeff(1, 3, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedCoefficient);
    }
}

TEST(LinearInequality, CorrelationFormDimension)
{
    // K_{2,2}: 4 nodes + 4 edges.
    auto ineq = LinearInequality::correlation_form(Graph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    EXPECT_EQ(ineq.ambient_dim(), 8U);
    ineq.set_node_coeff(2, -1);
    EXPECT_EQ(ineq.node_coeff(2), -1);
}

TEST(LinearInequality, SameTermsIgnoresSupport)
{
    auto a = LinearInequality::cut_form(3);
    a.set_edge_coeff(1, 2, 1);
    auto b = LinearInequality::cut_form(Graph(3, {{1, 2}}));
    b.set_edge_coeff(1, 2, 1);
    EXPECT_FALSE(a == b);
    EXPECT_TRUE(a.same_terms(b));
    EXPECT_TRUE(a.with_support(Graph(3, {{1, 2}})) == b);
}

TEST(Vectors, CutVectorMarksCrossingEdges)
{
    const auto g = Graph::complete(4);
    const auto s = CutSet::from_members(4, std::vector<Node>{1, 2});
    // 12 13 14 23 24 34
    EXPECT_EQ(cut_vector(g, s), (std::vector<int>{0, 1, 1, 1, 1, 0}));
    EXPECT_EQ(cut_vector(g, s), cut_vector(g, s.complement()));
}

TEST(Vectors, CorrelationVectorNodesThenEdges)
{
    const Graph g(3, {{1, 2}, {2, 3}});
    const auto s = CutSet::from_members(3, std::vector<Node>{2, 3});
    EXPECT_EQ(correlation_vector(g, s), (std::vector<int>{0, 1, 1, 0, 1}));
}

TEST(Evaluate, MatchesDirectSum)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto ineq = oracle::random_valid(rng, 6, 3);
        const auto s = oracle::random_cut(rng, 6);
        EXPECT_EQ(evaluate(ineq, s), oracle::cut_value(ineq, s.mask()));
        const auto vec = cut_vector(ineq.graph(), s);
        EXPECT_EQ(evaluate(ineq, vec), evaluate(ineq, s));
    }
}

TEST(Evaluate, SizeMismatch)
{
    const auto ineq = LinearInequality::cut_form(3);
    const std::vector<int> short_vec{1, 0};
    try {
        evaluate(ineq, short_vec);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::AmbientMismatch);
    }
}

TEST(AddTriangle, Terms)
{
    auto ineq = LinearInequality::cut_form(3);
    add_triangle_term(ineq, 1, 2, 3, 2);
    EXPECT_EQ(ineq.edge_coeff(1, 2), 2);
    EXPECT_EQ(ineq.edge_coeff(1, 3), -2);
    EXPECT_EQ(ineq.edge_coeff(2, 3), -2);
}
