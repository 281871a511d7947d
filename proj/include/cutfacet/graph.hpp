#ifndef CUTFACET_GRAPH_HPP
#define CUTFACET_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cutfacet {

/// Nodes are labeled 1..n throughout.
using Node = int;

/// Undirected edge stored with u < v.
struct Edge {
    Node u = 0;
    Node v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Canonical edge for an unordered pair; throws InvalidArgument on a loop.
Edge make_edge(Node a, Node b);

std::string to_string(const Edge& e);

/// Simple undirected graph on nodes 1..n.
class Graph {
public:
    Graph() = default;
    explicit Graph(int node_count);
    /// Edges may be given in any orientation; duplicates, loops and
    /// out-of-range endpoints are rejected.
    Graph(int node_count, std::vector<Edge> edges);

    static Graph complete(int node_count);

    int node_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    /// Sorted lexicographically by (u, v).
    std::span<const Edge> edges() const noexcept { return edges_; }

    bool has_node(Node x) const noexcept { return x >= 1 && x <= n_; }
    bool has_edge(Node a, Node b) const noexcept;
    /// Position of the edge in edges(), if present.
    std::optional<std::size_t> edge_index(Node a, Node b) const noexcept;

    int degree(Node x) const;
    std::vector<Node> neighbors(Node x) const;
    bool is_complete() const noexcept;

    bool operator==(const Graph& other) const noexcept
    {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> index_;  // n*n lookup, -1 when absent
};

/// Bijection on 1..n, stored as the image of each node.
class Permutation {
public:
    Permutation() = default;
    /// images[i] is the image of node i+1. Throws NotBijection.
    explicit Permutation(std::vector<Node> images);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    Node operator()(Node x) const { return images_.at(static_cast<std::size_t>(x - 1)); }
    std::span<const Node> images() const noexcept { return images_; }

    Permutation inverse() const;
    /// (this ∘ first)(x) = this(first(x)).
    Permutation after(const Permutation& first) const;
    bool is_identity() const noexcept;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<Node> images_;
};

Graph permute(const Graph& g, const Permutation& perm);

struct Contraction {
    Graph graph;
    /// node_map[x-1] is the label of old node x in the contracted graph.
    std::vector<Node> node_map;
};

/// Identify u and v into min(u,v), drop loops and parallel edges and
/// relabel the remaining nodes to 1..n-1 in order.
Contraction contract(const Graph& g, Node u, Node v);

/// Split edge uu' with the new node n+1 and join it to every node in w_set.
Graph detour_extension(const Graph& g, Node u, Node u_prime, std::span<const Node> w_set);

} // namespace cutfacet

#endif
