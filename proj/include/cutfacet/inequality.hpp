#ifndef CUTFACET_INEQUALITY_HPP
#define CUTFACET_INEQUALITY_HPP

#include "cutfacet/graph.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace cutfacet {

using Coeff = std::int64_t;

/// Subset of nodes 1..n as a bitmask (bit x-1 for node x).
class CutSet {
public:
    CutSet() = default;
    CutSet(int node_count, std::uint64_t mask);
    static CutSet from_members(int node_count, std::span<const Node> members);

    /// Representative of δ(S) that does not contain node n.
    CutSet canonical() const;
    CutSet complement() const;

    int node_count() const noexcept { return n_; }
    std::uint64_t mask() const noexcept { return mask_; }
    bool contains(Node x) const noexcept { return x >= 1 && x <= n_ && ((mask_ >> (x - 1)) & 1U); }
    std::vector<Node> members() const;

    auto operator<=>(const CutSet&) const = default;

private:
    int n_ = 0;
    std::uint64_t mask_ = 0;
};

enum class Form { Cut, Correlation };

/// a^T x <= a0 with exact integer data.
///
/// Cut form lives on CUT(graph) (K_N unless a sparser support graph is
/// given); keys are the graph's edges. Correlation form lives on COR(graph);
/// keys are the graph's nodes and edges.
class LinearInequality {
public:
    LinearInequality() = default;

    static LinearInequality cut_form(int node_count);
    static LinearInequality cut_form(Graph support);
    static LinearInequality correlation_form(Graph g);

    Form form() const noexcept { return form_; }
    const Graph& graph() const noexcept { return graph_; }
    int node_count() const noexcept { return graph_.node_count(); }
    /// Number of coordinates: |E| for cut form, |V|+|E| for correlation form.
    std::size_t ambient_dim() const noexcept;

    Coeff rhs() const noexcept { return rhs_; }
    void set_rhs(Coeff r) noexcept { rhs_ = r; }

    /// Zero for pairs that are not edges of the ambient graph.
    Coeff edge_coeff(Node a, Node b) const;
    /// Throws UnsupportedCoefficient when ab is not an edge of the ambient graph.
    void set_edge_coeff(Node a, Node b, Coeff c);
    void add_edge_coeff(Node a, Node b, Coeff c);

    Coeff node_coeff(Node x) const;
    void set_node_coeff(Node x, Coeff c);
    void add_node_coeff(Node x, Coeff c);

    /// Aligned with graph().edges().
    std::span<const Coeff> edge_coeffs() const noexcept { return edge_coeffs_; }
    std::span<const Coeff> node_coeffs() const noexcept { return node_coeffs_; }

    /// Nonzero edge terms.
    std::map<Edge, Coeff> edge_terms() const;
    /// Same terms and rhs, ignoring which ambient graph carries them.
    bool same_terms(const LinearInequality& other) const;

    /// Re-embed a cut-form inequality on another graph with the same node
    /// count; fails with UnsupportedCoefficient if a nonzero term is lost.
    LinearInequality with_support(Graph support) const;

    bool operator==(const LinearInequality& other) const = default;

private:
    Form form_ = Form::Cut;
    Graph graph_;
    std::vector<Coeff> edge_coeffs_;
    std::vector<Coeff> node_coeffs_;
    Coeff rhs_ = 0;
};

/// T(u,v;w) = x_uv - x_uw - x_vw added with the given multiplier.
void add_triangle_term(LinearInequality& ineq, Node u, Node v, Node w, Coeff multiplier);

/// 0/1 vector over g.edges(): 1 iff exactly one endpoint lies in s.
std::vector<int> cut_vector(const Graph& g, const CutSet& s);

/// 0/1 vector over g's nodes followed by g.edges().
std::vector<int> correlation_vector(const Graph& g, const CutSet& s);

/// a^T x for a vector in the inequality's ambient coordinates.
Coeff evaluate(const LinearInequality& ineq, std::span<const int> vec);

/// a^T δ(S) for cut form, a^T p(S) for correlation form.
Coeff evaluate(const LinearInequality& ineq, const CutSet& s);

} // namespace cutfacet

#endif
