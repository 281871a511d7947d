#include "cutfacet/engine.hpp"
#include "cutfacet/error.hpp"
#include "cutfacet/families.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace cutfacet;

namespace {

LinearInequality k3_triangle()
{
    auto t = LinearInequality::cut_form(3);
    t.set_edge_coeff(1, 2, 1);
    t.set_edge_coeff(1, 3, -1);
    t.set_edge_coeff(2, 3, -1);
    return t;
}

std::vector<std::uint64_t> masks(const RootSet& r)
{
    std::vector<std::uint64_t> out;
    for (const auto& s : r.roots)
        out.push_back(s.mask());
    return out;
}

} // namespace

TEST(Enumerate, CountsCanonicalCuts)
{
    for (int n = 1; n <= 10; ++n) {
        const auto range = enumerate_cuts(n);
        EXPECT_EQ(range.size(), std::uint64_t{1} << (n - 1));
        for (const auto s : range)
            EXPECT_FALSE(s.contains(n));
    }
}

TEST(Enumerate, MaxNodesGuard)
{
    EngineOptions opts;
    opts.max_nodes = 10;
    try {
        enumerate_cuts(11, opts);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooLarge);
    }
    EXPECT_NO_THROW(enumerate_cuts(10, opts));
}

TEST(Enumerate, SplitCoversRange)
{
    const auto range = enumerate_cuts(9);
    for (int parts : {1, 2, 3, 7, 1000}) {
        const auto pieces = range.split(parts);
        std::uint64_t next = range.first();
        for (const auto& p : pieces) {
            EXPECT_EQ(p.first(), next);
            next = p.last();
        }
        EXPECT_EQ(next, range.last());
    }
}

TEST(Rank, MatchesRationalElimination)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> dims(1, 9);
        const int rows = dims(rng);
        const int cols = dims(rng);
        std::uniform_int_distribution<int> val(-3, 3);
        IntMatrix m(static_cast<std::size_t>(rows), std::vector<Coeff>(static_cast<std::size_t>(cols)));
        // Low-rank rows now and then.
        for (auto& r : m)
            for (auto& x : r)
                x = val(rng);
        if (trial % 3 == 0 && rows > 2)
            for (int c = 0; c < cols; ++c)
                m[2][static_cast<std::size_t>(c)] = m[0][static_cast<std::size_t>(c)] - 2 * m[1][static_cast<std::size_t>(c)];
        EXPECT_EQ(linear_rank(m), oracle::rank_of(m));
        EXPECT_EQ(affine_rank(m), oracle::affine_rank_of(m));
    }
}

TEST(Rank, HugeEntriesFallBackExactly)
{
    // Products overflow 64 bits during elimination.
    const Coeff big = Coeff{1} << 40;
    IntMatrix m{{big, big + 1, 3, 7}, {big + 3, big - 5, 1, 2}, {2 * big + 3, 2 * big - 4, 4, 10}, {5, big, big, 1}};
    EXPECT_EQ(linear_rank(m), oracle::rank_of(m));
    m[3] = {3 * big + 3, 3 * big - 3, 7, 17};  // row0 + row2
    EXPECT_EQ(linear_rank(m), oracle::rank_of(m));
    EXPECT_EQ(linear_rank(m), 3U);
}

TEST(Rank, EmptyAndZero)
{
    EXPECT_EQ(linear_rank({}), 0U);
    EXPECT_EQ(affine_rank({}), 0U);
    EXPECT_EQ(linear_rank({{0, 0}, {0, 0}}), 0U);
    EXPECT_EQ(affine_rank({{0, 0}, {0, 0}}), 1U);
    EXPECT_EQ(affine_rank({{0, 0}, {1, 0}, {0, 1}}), 3U);
}

TEST(Validity, TriangleK3)
{
    const auto r = facet_report(k3_triangle());
    EXPECT_TRUE(r.valid);
    EXPECT_EQ(r.ambient_dim, 3U);
    EXPECT_EQ(r.root_count, 3U);
    EXPECT_EQ(r.affine_rank, 3U);
    EXPECT_TRUE(r.is_facet);
    EXPECT_EQ(masks(roots(k3_triangle())), (std::vector<std::uint64_t>{0, 1, 2}));
}

TEST(Validity, ViolatingCutIsSmallestMask)
{
    auto t = k3_triangle();
    t.set_rhs(-1);
    const auto v = is_valid(t);
    EXPECT_FALSE(v.valid);
    ASSERT_TRUE(v.violating_cut);
    EXPECT_EQ(v.violating_cut->mask(), 0U);
    const auto r = facet_report(t);
    EXPECT_FALSE(r.valid);
    EXPECT_EQ(r.root_count, 0U);
    EXPECT_EQ(r.affine_rank, 0U);
    EXPECT_FALSE(r.is_facet);
    EXPECT_THROW(roots(t), Error);
}

TEST(Validity, RandomAgainstFullScan)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> nd(3, 7);
        const int n = nd(rng);
        auto ineq = oracle::random_valid(rng, n);
        if (trial % 2 == 1)
            ineq.set_rhs(ineq.rhs() - 1);
        const auto scan = oracle::scan(ineq);
        const auto v = is_valid(ineq);
        EXPECT_EQ(v.valid, scan.valid);
        if (!scan.valid) {
            std::uint64_t first = 0;
            while (oracle::cut_value(ineq, first) <= ineq.rhs())
                ++first;
            EXPECT_EQ(v.violating_cut->mask(), first);
            continue;
        }
        EXPECT_EQ(masks(roots(ineq)), scan.roots);
        EXPECT_EQ(facet_report(ineq).is_facet, oracle::is_facet(ineq));
    }
}

TEST(Validity, ThreadCountInvariant)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto ineq = oracle::random_valid(rng, 9);
        if (trial % 3 == 0)
            ineq.set_rhs(ineq.rhs() - 1);
        const auto base = facet_report(ineq, {1, 24});
        for (int threads : {2, 3, 4, 8}) {
            EXPECT_EQ(facet_report(ineq, {threads, 24}), base);
            if (base.valid)
                EXPECT_EQ(roots(ineq, {threads, 24}).roots, roots(ineq).roots);
        }
    }
}

TEST(Facet, PentagonalIsFacetOfCut5)
{
    const auto r = facet_report(pure_gonal(5, 2));
    EXPECT_TRUE(r.is_facet);
    EXPECT_EQ(r.ambient_dim, 10U);
}

TEST(Facet, ChshCorrelationForm)
{
    // CHSH in correlation form: -p_A1 - p_B1 + p_A1B1 + p_A1B2 + p_A2B1 - p_A2B2 <= 0.
    auto chsh = LinearInequality::correlation_form(complete_bipartite(2, 2));
    chsh.set_node_coeff(1, -1);
    chsh.set_node_coeff(3, -1);
    chsh.set_edge_coeff(1, 3, 1);
    chsh.set_edge_coeff(1, 4, 1);
    chsh.set_edge_coeff(2, 3, 1);
    chsh.set_edge_coeff(2, 4, -1);
    const auto r = facet_report(chsh);
    EXPECT_TRUE(r.valid);
    EXPECT_TRUE(r.is_facet);
    EXPECT_EQ(r.ambient_dim, 8U);
    EXPECT_EQ(r.scale, 2);
    EXPECT_EQ(build_imm22(2), chsh);
}

TEST(Facet, FaceContainment)
{
    // x12 + x13 + x23 <= 2 is a facet; its roots are the three singletons.
    auto perimeter = LinearInequality::cut_form(3);
    perimeter.set_edge_coeff(1, 2, 1);
    perimeter.set_edge_coeff(1, 3, 1);
    perimeter.set_edge_coeff(2, 3, 1);
    perimeter.set_rhs(2);
    EXPECT_TRUE(face_contained_in(k3_triangle(), k3_triangle()));
    EXPECT_FALSE(face_contained_in(k3_triangle(), perimeter));
    // The trivial inequality 0 <= 0 contains everything.
    EXPECT_TRUE(face_contained_in(perimeter, LinearInequality::cut_form(3)));
    EXPECT_THROW(face_contained_in(perimeter, LinearInequality::cut_form(4)), Error);
}
