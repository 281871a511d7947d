#ifndef CUTFACET_GH_PAIR_HPP
#define CUTFACET_GH_PAIR_HPP

#include "cutfacet/graph.hpp"

#include <array>
#include <vector>

namespace cutfacet {

/// A validated (G, H) instance: H is a matching on the nodes of G, its
/// components V_1..V_k are ordered by smallest member, and G has exactly
/// one edge e_ij between every pair of components and no other edges.
class GHPair {
public:
    const Graph& g() const noexcept { return g_; }
    const Graph& h() const noexcept { return h_; }
    int n() const noexcept { return g_.node_count(); }
    int k() const noexcept { return static_cast<int>(components_.size()); }
    int t() const noexcept { return static_cast<int>(h_.edge_count()); }

    /// Component i (1-based), members ascending.
    const std::vector<Node>& component(int i) const { return components_.at(static_cast<std::size_t>(i - 1)); }
    /// 1-based index of the component holding node x.
    int component_of(Node x) const { return component_of_.at(static_cast<std::size_t>(x - 1)); }
    bool is_singleton(int i) const { return component(i).size() == 1; }
    /// The edge e_ij of G joining V_i and V_j (i != j, either order).
    Edge cross_edge(int i, int j) const;
    /// Endpoint of e_ij that lies in V_i.
    Node cross_endpoint(int i, int j) const;

    /// True when h is exactly H_{k,t}.
    bool in_hkt_form() const;

    bool operator==(const GHPair& other) const noexcept { return g_ == other.g_ && h_ == other.h_; }

private:
    friend GHPair validate_gh(const Graph& g, const Graph& h);

    Graph g_;
    Graph h_;
    std::vector<std::vector<Node>> components_;
    std::vector<int> component_of_;
    std::vector<Edge> cross_;  // k*k table
};

/// Throws MatchingViolation, EdgeCountMismatch, IntraComponentEdge,
/// DuplicateCrossEdge or MissingCrossEdge.
GHPair validate_gh(const Graph& g, const Graph& h);

/// H_{k,t}: nodes 1..k+t, edges {i, k+i} for 1 <= i <= t.
Graph build_H(int k, int t);

struct HktRelabeling {
    GHPair pair;
    Permutation perm;  // old label -> new label
};

/// Matched components sorted by smaller endpoint map to {i, k+i} (smaller
/// endpoint to i), then unmatched nodes in ascending order to t+1..k.
HktRelabeling relabel_to_hkt(const GHPair& pair);

GHPair permute(const GHPair& pair, const Permutation& perm);

/// A 4-cycle c1 c2 c3 c4 of G with its nodes in distinct components.
class Cycle4 {
public:
    Cycle4() = default;
    Cycle4(const GHPair& pair, std::array<Node, 4> nodes);

    const std::array<Node, 4>& nodes() const noexcept { return nodes_; }
    /// c_lambda for lambda in 1..4.
    Node at(int lambda) const { return nodes_.at(static_cast<std::size_t>(lambda - 1)); }
    std::array<Edge, 4> edges() const;
    bool contains(Node x) const noexcept;
    /// 1..4 position of x, 0 when absent.
    int position(Node x) const noexcept;
    /// The node of the cycle not adjacent to x on the cycle.
    Node opposite(Node x) const;

    bool operator==(const Cycle4&) const = default;

private:
    std::array<Node, 4> nodes_{};
};

/// lambda ⊕ mu: the unique nu in 1..4 with nu ≡ lambda + mu (mod 4).
int cyclic_add(int lambda, int mu);

Cycle4 permute(const Cycle4& c, const GHPair& permuted_pair, const Permutation& perm);

} // namespace cutfacet

#endif
