#include "cutfacet/families.hpp"

#include "cutfacet/error.hpp"

#include <numeric>

namespace cutfacet {

HypermetricVector::HypermetricVector(std::vector<Coeff> b) : b_(std::move(b))
{
    if (b_.size() < 3)
        fail(ErrorCode::BadParameters, "hypermetric vectors need N >= 3 entries");
    if (std::accumulate(b_.begin(), b_.end(), Coeff{0}) != 1)
        fail(ErrorCode::SumNotOne, "entries of b must sum to 1");
}

LinearInequality hypermetric(const HypermetricVector& b)
{
    const auto& v = b.values();
    const int n = static_cast<int>(v.size());
    auto out = LinearInequality::cut_form(n);
    for (Node i = 1; i <= n; ++i)
        for (Node j = i + 1; j <= n; ++j)
            out.set_edge_coeff(i, j, v[static_cast<std::size_t>(i - 1)] * v[static_cast<std::size_t>(j - 1)]);
    return out;
}

LinearInequality pure_gonal(int n, int s)
{
    if (s < 1 || n < 2 * s + 1)
        fail(ErrorCode::BadParameters, "pure (2s+1)-gonal needs s >= 1 and N >= 2s+1");
    std::vector<Coeff> b(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < s + 1; ++i)
        b[static_cast<std::size_t>(i)] = 1;
    for (int i = s + 1; i < 2 * s + 1; ++i)
        b[static_cast<std::size_t>(i)] = -1;
    return hypermetric(HypermetricVector(std::move(b)));
}

LinearInequality hypermetric_thm3(int n)
{
    if (n < 3)
        fail(ErrorCode::BadParameters, "needs N >= 3");
    std::vector<Coeff> b(static_cast<std::size_t>(n), 1);
    b[static_cast<std::size_t>(n - 2)] = -1;
    b[static_cast<std::size_t>(n - 1)] = -(n - 4);
    return hypermetric(HypermetricVector(std::move(b)));
}

LinearInequality triangle(int n, Node u, Node v, Node w)
{
    if (u == v || v == w || u == w || u < 1 || v < 1 || w < 1 || u > n || v > n || w > n)
        fail(ErrorCode::BadParameters, "triangle needs three distinct nodes of K_N");
    auto out = LinearInequality::cut_form(n);
    add_triangle_term(out, u, v, w, 1);
    return out;
}

LinearInequality gr7()
{
    auto out = LinearInequality::cut_form(7);
    for (Node i = 1; i <= 4; ++i)
        for (Node j = i + 1; j <= 4; ++j)
            out.set_edge_coeff(i, j, 1);
    out.set_edge_coeff(5, 6, 1);
    out.set_edge_coeff(5, 7, 1);
    out.set_edge_coeff(6, 7, -1);
    out.set_edge_coeff(1, 6, -1);
    out.set_edge_coeff(3, 6, -1);
    out.set_edge_coeff(2, 7, -1);
    out.set_edge_coeff(4, 7, -1);
    for (Node i = 1; i <= 4; ++i)
        out.set_edge_coeff(5, i, -2);
    return out;
}

Permutation gr7_relabeling()
{
    return Permutation({6, 1, 2, 3, 4, 7, 5});
}

Permutation gr8_relabeling()
{
    return Permutation({6, 1, 2, 3, 4, 7, 5, 8});
}

std::pair<Node, Node> gr8_collapse_pair()
{
    return {5, 8};
}

GHPair g6_pair()
{
    const auto unlabeled = permute(gr7(), gr7_relabeling().inverse());
    const std::vector<Node> cut{1, 6};
    return reconstruct_gh(switch_by(unlabeled, CutSet::from_members(7, cut)));
}

LinearInequality gr8()
{
    const GHPair pair = g6_pair();
    const auto lifted = build_I_prime(pair, Cycle4(pair, {2, 3, 4, 5}));
    const std::vector<Node> cut{1, 6};
    return permute(switch_by(lifted, CutSet::from_members(8, cut)), gr8_relabeling());
}

LinearInequality build_I(const GHPair& pair)
{
    const int n = pair.n();
    const Node apex = n + 1;
    auto out = LinearInequality::cut_form(n + 1);
    for (const auto& e : pair.g().edges())
        add_triangle_term(out, e.u, e.v, apex, 1);
    for (const auto& e : pair.h().edges())
        add_triangle_term(out, e.u, e.v, apex, -1);
    for (int i = 1; i <= pair.k(); ++i)
        if (pair.is_singleton(i))
            out.add_edge_coeff(pair.component(i).front(), apex, 2);
    out.set_rhs(2);
    return out;
}

LinearInequality build_I_prime(const GHPair& pair, const Cycle4& cycle)
{
    const int n = pair.n();
    const auto base = build_I(pair);
    auto out = LinearInequality::cut_form(n + 2);
    for (const auto& [e, c] : base.edge_terms())
        out.set_edge_coeff(e.u, e.v, c);
    for (Node c : cycle.nodes()) {
        out.add_edge_coeff(c, n + 1, 1);
        out.add_edge_coeff(c, n + 2, -1);
    }
    out.set_rhs(2);
    return out;
}

GHPair reconstruct_gh(const LinearInequality& ineq)
{
    if (ineq.form() != Form::Cut || ineq.node_count() < 2)
        fail(ErrorCode::BadParameters, "expected a cut-form inequality on at least two nodes");
    const int n = ineq.node_count() - 1;
    std::vector<Edge> g_edges;
    std::vector<Edge> h_edges;
    for (const auto& [e, c] : ineq.edge_terms()) {
        if (e.v > n)
            continue;
        if (c == 1)
            g_edges.push_back(e);
        else if (c == -1)
            h_edges.push_back(e);
        else
            fail(ErrorCode::BadParameters, "coefficient " + std::to_string(c) + " on " + to_string(e)
                                               + " does not come from (G,H)");
    }
    GHPair pair = validate_gh(Graph(n, std::move(g_edges)), Graph(n, std::move(h_edges)));
    if (!(build_I(pair).same_terms(ineq)))
        fail(ErrorCode::BadParameters, "inequality is not I(G,H) for the recovered graphs");
    return pair;
}

Graph complete_bipartite(int left, int right)
{
    std::vector<Edge> edges;
    for (Node a = 1; a <= left; ++a)
        for (Node b = left + 1; b <= left + right; ++b)
            edges.push_back({a, b});
    return Graph(left + right, std::move(edges));
}

LinearInequality build_imm22(int m)
{
    if (m < 1)
        fail(ErrorCode::BadParameters, "I_mm22 needs m >= 1");
    const Imm22Labels l{m};
    auto out = LinearInequality::correlation_form(complete_bipartite(m, m));
    out.add_node_coeff(l.corr_a(1), -1);
    for (int j = 1; j <= m; ++j)
        out.add_node_coeff(l.corr_b(j), -(m - j));
    for (int i = 2; i <= m; ++i)
        for (int j = 2; j <= m; ++j)
            if (i + j == m + 2)
                out.add_edge_coeff(l.corr_a(i), l.corr_b(j), -1);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (i + j <= m + 1)
                out.add_edge_coeff(l.corr_a(i), l.corr_b(j), 1);
    return out;
}

Graph kprime_1mm(int m)
{
    if (m < 1)
        fail(ErrorCode::BadParameters, "K'_{1,m,m} needs m >= 1");
    const Imm22Labels l{m};
    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i)
        edges.push_back(make_edge(l.z(), l.a(i)));
    for (int j = 2; j <= m + 1; ++j)
        edges.push_back(make_edge(l.z(), l.b(j)));
    for (int i = 1; i <= m; ++i)
        for (int j = 2; j <= m + 1; ++j)
            edges.push_back(make_edge(l.a(i), l.b(j)));
    return Graph(2 * m + 1, std::move(edges));
}

LinearInequality imm22_pipeline(int m)
{
    const auto mapped = covariance_map(build_imm22(m)).ineq;
    std::vector<Node> a_side;
    for (int i = 1; i <= m; ++i)
        a_side.push_back(i);
    const auto switched = switch_by(mapped, CutSet::from_members(2 * m + 1, a_side));

    // B_j (corr label m+j) becomes B_{m+2-j}, whose cut label is 2m+1-j.
    std::vector<Node> images(static_cast<std::size_t>(2 * m + 1));
    std::iota(images.begin(), images.end(), 1);
    for (int j = 1; j <= m; ++j)
        images[static_cast<std::size_t>(m + j - 1)] = 2 * m + 1 - j;
    return permute(switched, Permutation(std::move(images)));
}

LinearInequality imm22_closed_form(int m)
{
    if (m < 1)
        fail(ErrorCode::BadParameters, "needs m >= 1");
    const Imm22Labels l{m};
    auto out = LinearInequality::cut_form(kprime_1mm(m));
    out.add_edge_coeff(l.z(), l.a(1), -(m - 2));
    for (int i = 2; i <= m; ++i)
        out.add_edge_coeff(l.z(), l.a(i), -(m - i));
    out.add_edge_coeff(l.z(), l.b(m + 1), -(m - 2));
    for (int j = 2; j <= m; ++j)
        out.add_edge_coeff(l.z(), l.b(j), -(j - 2));
    for (int i = 2; i <= m; ++i)
        out.add_edge_coeff(l.a(i), l.b(i), -1);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m + 1; ++j)
            out.add_edge_coeff(l.a(i), l.b(j), 1);
    out.set_rhs(2);
    return out;
}

LinearInequality imm22_cut_form(int m)
{
    if (m < 2)
        fail(ErrorCode::BadParameters, "the cut-form rewrite needs m >= 2");
    auto out = imm22_pipeline(m);
    if (!(out == imm22_closed_form(m)))
        throw std::logic_error("I_mm22 rewrite does not match its closed form for m = " + std::to_string(m));
    return out;
}

GHPair imm22_gh_pair(int m)
{
    if (m < 2)
        fail(ErrorCode::BadParameters, "the (G,H) form of I_mm22 needs m >= 2");
    const Imm22Labels l{m};
    std::vector<Edge> g;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m + 1; ++j)
            if (j >= 2)
                g.push_back(make_edge(l.a(i), l.b(j)));
    std::vector<Edge> h;
    for (int i = 2; i <= m; ++i)
        h.push_back(make_edge(l.a(i), l.b(i)));
    return validate_gh(Graph(2 * m, std::move(g)), Graph(2 * m, std::move(h)));
}

Imm22Chain imm22_elimination_chain(int m)
{
    if (m < 3)
        fail(ErrorCode::BadParameters, "the elimination chain needs m >= 3");
    const Imm22Labels l{m};
    const GHPair pair = imm22_gh_pair(m);

    // Identify B_2 with A_2, then A_m with B_m.
    const auto g1 = contract(pair.g(), l.b(2), l.a(2));
    const auto h1 = contract(pair.h(), l.b(2), l.a(2));
    const auto at1 = [&](Node x) { return g1.node_map[static_cast<std::size_t>(x - 1)]; };
    const auto g2 = contract(g1.graph, at1(l.a(m)), at1(l.b(m)));
    const auto h2 = contract(h1.graph, at1(l.a(m)), at1(l.b(m)));
    const auto at = [&](Node x) { return g2.node_map[static_cast<std::size_t>(at1(x) - 1)]; };

    Imm22Chain chain;
    chain.contracted = validate_gh(g2.graph, h2.graph);
    chain.start = build_I(chain.contracted);

    const int n = 2 * m - 2;
    const Node z = n + 1;
    const Graph complete = Graph::complete(n + 1);

    std::vector<Node> w1{z};
    for (int i = 3; i <= m - 1; ++i)
        w1.push_back(at(l.a(i)));
    w1.push_back(at(l.b(m)));
    w1.push_back(at(l.b(m + 1)));
    chain.first = triangular_eliminate(chain.start, complete, at(l.a(1)), at(l.a(2)), w1);
    const Node b2 = chain.first.new_node;

    std::vector<Node> w2{z, b2};
    for (int j = 3; j <= m - 1; ++j)
        w2.push_back(at(l.b(j)));
    // Oriented so that the new node's edge to B_{m+1} carries +a and its edge
    // to the merged B_m carries -|a|.
    chain.second = triangular_eliminate(chain.first.ineq, chain.first.graph, at(l.b(m + 1)), at(l.b(m)), w2);
    const Node am = chain.second.new_node;

    std::vector<Node> images(static_cast<std::size_t>(2 * m + 1), 0);
    for (Node x = 1; x <= 2 * m; ++x)
        if (x != l.b(2) && x != l.a(m))
            images[static_cast<std::size_t>(at(x) - 1)] = x;
    images[static_cast<std::size_t>(z - 1)] = l.z();
    images[static_cast<std::size_t>(b2 - 1)] = l.b(2);
    images[static_cast<std::size_t>(am - 1)] = l.a(m);
    chain.to_cut_labels = Permutation(std::move(images));

    chain.result = permute(chain.second.ineq, chain.to_cut_labels).with_support(kprime_1mm(m));
    return chain;
}

} // namespace cutfacet
