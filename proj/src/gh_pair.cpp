#include "cutfacet/gh_pair.hpp"

#include "cutfacet/error.hpp"

#include <algorithm>

namespace cutfacet {

namespace {

std::string pair_name(int i, int j)
{
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

} // namespace

Edge GHPair::cross_edge(int i, int j) const
{
    if (i == j || i < 1 || j < 1 || i > k() || j > k())
        fail(ErrorCode::InvalidArgument, "no cross edge for components " + pair_name(i, j));
    return cross_[static_cast<std::size_t>((i - 1) * k() + (j - 1))];
}

Node GHPair::cross_endpoint(int i, int j) const
{
    const Edge e = cross_edge(i, j);
    return component_of(e.u) == i ? e.u : e.v;
}

bool GHPair::in_hkt_form() const
{
    return h_ == build_H(k(), t());
}

GHPair validate_gh(const Graph& g, const Graph& h)
{
    if (g.node_count() != h.node_count())
        fail(ErrorCode::InvalidArgument, "G and H must share the node set");
    const int n = g.node_count();

    GHPair pair;
    pair.component_of_.assign(static_cast<std::size_t>(n), 0);

    std::vector<int> partner(static_cast<std::size_t>(n + 1), 0);
    for (const auto& e : h.edges()) {
        if (partner[static_cast<std::size_t>(e.u)] != 0 || partner[static_cast<std::size_t>(e.v)] != 0)
            fail(ErrorCode::MatchingViolation, "edges of H share a node at " + to_string(e));
        partner[static_cast<std::size_t>(e.u)] = e.v;
        partner[static_cast<std::size_t>(e.v)] = e.u;
    }

    // Components ordered by smallest member.
    for (Node x = 1; x <= n; ++x) {
        const Node p = partner[static_cast<std::size_t>(x)];
        if (p != 0 && p < x)
            continue;
        pair.components_.push_back(p == 0 ? std::vector<Node>{x} : std::vector<Node>{x, p});
        const int idx = static_cast<int>(pair.components_.size());
        pair.component_of_[static_cast<std::size_t>(x - 1)] = idx;
        if (p != 0)
            pair.component_of_[static_cast<std::size_t>(p - 1)] = idx;
    }

    const int k = static_cast<int>(pair.components_.size());
    const std::size_t expected = static_cast<std::size_t>(k) * static_cast<std::size_t>(k - 1) / 2;
    if (g.edge_count() != expected)
        fail(ErrorCode::EdgeCountMismatch,
             "|E| = " + std::to_string(g.edge_count()) + " but k(k-1)/2 = " + std::to_string(expected));

    pair.cross_.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), Edge{});
    for (const auto& e : g.edges()) {
        const int i = pair.component_of(e.u);
        const int j = pair.component_of(e.v);
        if (i == j)
            fail(ErrorCode::IntraComponentEdge, "edge " + to_string(e) + " lies inside component " + std::to_string(i));
        const auto lo = static_cast<std::size_t>(std::min(i, j) - 1);
        const auto hi = static_cast<std::size_t>(std::max(i, j) - 1);
        const auto ku = static_cast<std::size_t>(k);
        if (pair.cross_[lo * ku + hi] != Edge{})
            fail(ErrorCode::DuplicateCrossEdge, "components " + pair_name(static_cast<int>(lo + 1), static_cast<int>(hi + 1))
                                                    + " are joined twice");
        pair.cross_[lo * ku + hi] = e;
        pair.cross_[hi * ku + lo] = e;
    }
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            if (pair.cross_[static_cast<std::size_t>((i - 1) * k + (j - 1))] == Edge{})
                fail(ErrorCode::MissingCrossEdge, "components " + pair_name(i, j) + " are not joined");

    pair.g_ = g;
    pair.h_ = h;
    return pair;
}

Graph build_H(int k, int t)
{
    if (k < 1 || t < 0 || t > k)
        fail(ErrorCode::BadParameters, "H_{k,t} needs k >= 1 and 0 <= t <= k");
    std::vector<Edge> edges;
    for (int i = 1; i <= t; ++i)
        edges.push_back({i, k + i});
    return Graph(k + t, std::move(edges));
}

HktRelabeling relabel_to_hkt(const GHPair& pair)
{
    const int k = pair.k();
    const int t = pair.t();
    std::vector<Node> images(static_cast<std::size_t>(pair.n()), 0);
    int matched = 0;
    int unmatched = t;
    // Components are already ordered by smallest member.
    for (int i = 1; i <= k; ++i) {
        const auto& comp = pair.component(i);
        if (comp.size() == 2) {
            ++matched;
            images[static_cast<std::size_t>(comp[0] - 1)] = matched;
            images[static_cast<std::size_t>(comp[1] - 1)] = k + matched;
        } else {
            images[static_cast<std::size_t>(comp[0] - 1)] = ++unmatched;
        }
    }
    Permutation perm(std::move(images));
    return {permute(pair, perm), perm};
}

GHPair permute(const GHPair& pair, const Permutation& perm)
{
    return validate_gh(permute(pair.g(), perm), permute(pair.h(), perm));
}

Cycle4::Cycle4(const GHPair& pair, std::array<Node, 4> nodes) : nodes_(nodes)
{
    for (Node x : nodes)
        if (!pair.g().has_node(x))
            fail(ErrorCode::NotACycle, "cycle node " + std::to_string(x) + " outside the graph");
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (pair.component_of(nodes[static_cast<std::size_t>(a)]) == pair.component_of(nodes[static_cast<std::size_t>(b)]))
                fail(ErrorCode::NotACycle, "cycle nodes must lie in distinct components");
    for (const auto& e : edges())
        if (!pair.g().has_edge(e.u, e.v))
            fail(ErrorCode::NotACycle, "cycle edge " + to_string(e) + " is not in G");
}

std::array<Edge, 4> Cycle4::edges() const
{
    return {make_edge(nodes_[0], nodes_[1]), make_edge(nodes_[1], nodes_[2]), make_edge(nodes_[2], nodes_[3]),
            make_edge(nodes_[3], nodes_[0])};
}

bool Cycle4::contains(Node x) const noexcept
{
    return position(x) != 0;
}

int Cycle4::position(Node x) const noexcept
{
    for (int i = 0; i < 4; ++i)
        if (nodes_[static_cast<std::size_t>(i)] == x)
            return i + 1;
    return 0;
}

Node Cycle4::opposite(Node x) const
{
    const int pos = position(x);
    if (pos == 0)
        fail(ErrorCode::NotOnCycle, "node " + std::to_string(x) + " is not on the cycle");
    return at(cyclic_add(pos, 2));
}

int cyclic_add(int lambda, int mu)
{
    return ((lambda + mu - 1) % 4 + 4) % 4 + 1;
}

Cycle4 permute(const Cycle4& c, const GHPair& permuted_pair, const Permutation& perm)
{
    return Cycle4(permuted_pair, {perm(c.at(1)), perm(c.at(2)), perm(c.at(3)), perm(c.at(4))});
}

} // namespace cutfacet
