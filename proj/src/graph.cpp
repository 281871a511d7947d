#include "cutfacet/graph.hpp"

#include "cutfacet/error.hpp"

#include <algorithm>
#include <set>

namespace cutfacet {

Edge make_edge(Node a, Node b)
{
    if (a == b)
        fail(ErrorCode::InvalidArgument, "self-loop at node " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e)
{
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(int node_count) : Graph(node_count, {}) {}

Graph::Graph(int node_count, std::vector<Edge> edges) : n_(node_count)
{
    if (node_count < 0)
        fail(ErrorCode::InvalidArgument, "negative node count");
    for (auto& e : edges) {
        e = make_edge(e.u, e.v);
        if (!has_node(e.u) || !has_node(e.v))
            fail(ErrorCode::InvalidArgument, "edge " + to_string(e) + " outside 1.." + std::to_string(n_));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        fail(ErrorCode::InvalidArgument, "duplicate edge");
    edges_ = std::move(edges);

    index_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto [u, v] = edges_[i];
        index_[static_cast<std::size_t>((u - 1) * n_ + (v - 1))] = static_cast<int>(i);
        index_[static_cast<std::size_t>((v - 1) * n_ + (u - 1))] = static_cast<int>(i);
    }
}

Graph Graph::complete(int node_count)
{
    std::vector<Edge> edges;
    for (Node u = 1; u <= node_count; ++u)
        for (Node v = u + 1; v <= node_count; ++v)
            edges.push_back({u, v});
    return Graph(node_count, std::move(edges));
}

bool Graph::has_edge(Node a, Node b) const noexcept
{
    return edge_index(a, b).has_value();
}

std::optional<std::size_t> Graph::edge_index(Node a, Node b) const noexcept
{
    if (!has_node(a) || !has_node(b) || a == b)
        return std::nullopt;
    const int idx = index_[static_cast<std::size_t>((a - 1) * n_ + (b - 1))];
    if (idx < 0)
        return std::nullopt;
    return static_cast<std::size_t>(idx);
}

int Graph::degree(Node x) const
{
    return static_cast<int>(neighbors(x).size());
}

std::vector<Node> Graph::neighbors(Node x) const
{
    if (!has_node(x))
        fail(ErrorCode::InvalidArgument, "node " + std::to_string(x) + " not in graph");
    std::vector<Node> out;
    for (Node y = 1; y <= n_; ++y)
        if (y != x && has_edge(x, y))
            out.push_back(y);
    return out;
}

bool Graph::is_complete() const noexcept
{
    return edges_.size() == static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ > 0 ? n_ - 1 : 0) / 2;
}

Permutation::Permutation(std::vector<Node> images) : images_(std::move(images))
{
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Node y : images_) {
        if (y < 1 || y > n || seen[static_cast<std::size_t>(y - 1)])
            fail(ErrorCode::NotBijection, "map is not a bijection on 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(y - 1)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<Node> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        images[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const
{
    std::vector<Node> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<Node>(i + 1);
    return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& first) const
{
    if (first.size() != size())
        fail(ErrorCode::InvalidArgument, "composing permutations of different sizes");
    std::vector<Node> out(images_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (*this)(first.images_[i]);
    return Permutation(std::move(out));
}

bool Permutation::is_identity() const noexcept
{
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<Node>(i + 1))
            return false;
    return true;
}

Graph permute(const Graph& g, const Permutation& perm)
{
    if (perm.size() != g.node_count())
        fail(ErrorCode::InvalidArgument, "permutation size does not match graph");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges())
        edges.push_back(make_edge(perm(e.u), perm(e.v)));
    return Graph(g.node_count(), std::move(edges));
}

Contraction contract(const Graph& g, Node u, Node v)
{
    if (u == v || !g.has_node(u) || !g.has_node(v))
        fail(ErrorCode::InvalidArgument, "contract needs two distinct nodes of the graph");
    const Node keep = std::min(u, v);
    const Node drop = std::max(u, v);

    Contraction out;
    out.node_map.resize(static_cast<std::size_t>(g.node_count()));
    for (Node x = 1; x <= g.node_count(); ++x) {
        const Node merged = (x == drop) ? keep : x;
        out.node_map[static_cast<std::size_t>(x - 1)] = merged > drop ? merged - 1 : merged;
    }

    std::set<Edge> edges;
    for (const auto& e : g.edges()) {
        const Node a = out.node_map[static_cast<std::size_t>(e.u - 1)];
        const Node b = out.node_map[static_cast<std::size_t>(e.v - 1)];
        if (a != b)
            edges.insert(make_edge(a, b));
    }
    out.graph = Graph(g.node_count() - 1, {edges.begin(), edges.end()});
    return out;
}

Graph detour_extension(const Graph& g, Node u, Node u_prime, std::span<const Node> w_set)
{
    if (!g.has_edge(u, u_prime))
        fail(ErrorCode::NotAnEdge, to_string(make_edge(u, u_prime)) + " is not an edge");
    for (Node w : w_set)
        if (w == u || w == u_prime || !g.has_edge(u, w) || !g.has_edge(u_prime, w))
            fail(ErrorCode::NotCommonNeighbor, "node " + std::to_string(w) + " is not adjacent to both endpoints");

    const Node v = g.node_count() + 1;
    const Edge removed = make_edge(u, u_prime);
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (e != removed)
            edges.push_back(e);
    edges.push_back({u, v});
    edges.push_back({u_prime, v});
    std::set<Node> ws(w_set.begin(), w_set.end());
    for (Node w : ws)
        edges.push_back({w, v});
    return Graph(v, std::move(edges));
}

} // namespace cutfacet
