#include "cutfacet/inequality.hpp"

#include "cutfacet/error.hpp"

namespace cutfacet {

namespace {

std::uint64_t full_mask(int n)
{
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

} // namespace

CutSet::CutSet(int node_count, std::uint64_t mask) : n_(node_count), mask_(mask)
{
    if (node_count < 0 || node_count > 63)
        fail(ErrorCode::TooLarge, "cut sets support at most 63 nodes");
    if ((mask & ~full_mask(node_count)) != 0)
        fail(ErrorCode::InvalidArgument, "cut set has members outside 1.." + std::to_string(node_count));
}

CutSet CutSet::from_members(int node_count, std::span<const Node> members)
{
    std::uint64_t mask = 0;
    for (Node x : members) {
        if (x < 1 || x > node_count)
            fail(ErrorCode::InvalidArgument, "node " + std::to_string(x) + " outside 1.." + std::to_string(node_count));
        mask |= std::uint64_t{1} << (x - 1);
    }
    return CutSet(node_count, mask);
}

CutSet CutSet::canonical() const
{
    return (n_ > 0 && contains(n_)) ? complement() : *this;
}

CutSet CutSet::complement() const
{
    return CutSet(n_, ~mask_ & full_mask(n_));
}

std::vector<Node> CutSet::members() const
{
    std::vector<Node> out;
    for (Node x = 1; x <= n_; ++x)
        if (contains(x))
            out.push_back(x);
    return out;
}

LinearInequality LinearInequality::cut_form(int node_count)
{
    return cut_form(Graph::complete(node_count));
}

LinearInequality LinearInequality::cut_form(Graph support)
{
    LinearInequality out;
    out.form_ = Form::Cut;
    out.edge_coeffs_.assign(support.edge_count(), 0);
    out.graph_ = std::move(support);
    return out;
}

LinearInequality LinearInequality::correlation_form(Graph g)
{
    LinearInequality out;
    out.form_ = Form::Correlation;
    out.edge_coeffs_.assign(g.edge_count(), 0);
    out.node_coeffs_.assign(static_cast<std::size_t>(g.node_count()), 0);
    out.graph_ = std::move(g);
    return out;
}

std::size_t LinearInequality::ambient_dim() const noexcept
{
    return edge_coeffs_.size() + node_coeffs_.size();
}

Coeff LinearInequality::edge_coeff(Node a, Node b) const
{
    const auto idx = graph_.edge_index(a, b);
    return idx ? edge_coeffs_[*idx] : 0;
}

void LinearInequality::set_edge_coeff(Node a, Node b, Coeff c)
{
    const auto idx = graph_.edge_index(a, b);
    if (!idx) {
        if (c == 0)
            return;
        fail(ErrorCode::UnsupportedCoefficient,
             "pair " + std::to_string(a) + "," + std::to_string(b) + " is not an edge of the ambient graph");
    }
    edge_coeffs_[*idx] = c;
}

void LinearInequality::add_edge_coeff(Node a, Node b, Coeff c)
{
    set_edge_coeff(a, b, edge_coeff(a, b) + c);
}

Coeff LinearInequality::node_coeff(Node x) const
{
    if (form_ != Form::Correlation)
        return 0;
    if (!graph_.has_node(x))
        fail(ErrorCode::AmbientMismatch, "node " + std::to_string(x) + " not in ambient graph");
    return node_coeffs_[static_cast<std::size_t>(x - 1)];
}

void LinearInequality::set_node_coeff(Node x, Coeff c)
{
    if (form_ != Form::Correlation)
        fail(ErrorCode::AmbientMismatch, "node terms exist only in correlation form");
    if (!graph_.has_node(x))
        fail(ErrorCode::AmbientMismatch, "node " + std::to_string(x) + " not in ambient graph");
    node_coeffs_[static_cast<std::size_t>(x - 1)] = c;
}

void LinearInequality::add_node_coeff(Node x, Coeff c)
{
    set_node_coeff(x, node_coeff(x) + c);
}

std::map<Edge, Coeff> LinearInequality::edge_terms() const
{
    std::map<Edge, Coeff> out;
    const auto edges = graph_.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edge_coeffs_[i] != 0)
            out.emplace(edges[i], edge_coeffs_[i]);
    return out;
}

bool LinearInequality::same_terms(const LinearInequality& other) const
{
    return form_ == other.form_ && node_count() == other.node_count() && rhs_ == other.rhs_
        && edge_terms() == other.edge_terms() && node_coeffs_ == other.node_coeffs_;
}

LinearInequality LinearInequality::with_support(Graph support) const
{
    if (form_ != Form::Cut)
        fail(ErrorCode::AmbientMismatch, "with_support applies to cut form only");
    if (support.node_count() != node_count())
        fail(ErrorCode::AmbientMismatch, "support graph has a different node count");
    LinearInequality out = cut_form(std::move(support));
    for (const auto& [e, c] : edge_terms())
        out.set_edge_coeff(e.u, e.v, c);
    out.rhs_ = rhs_;
    return out;
}

void add_triangle_term(LinearInequality& ineq, Node u, Node v, Node w, Coeff multiplier)
{
    ineq.add_edge_coeff(u, v, multiplier);
    ineq.add_edge_coeff(u, w, -multiplier);
    ineq.add_edge_coeff(v, w, -multiplier);
}

std::vector<int> cut_vector(const Graph& g, const CutSet& s)
{
    if (s.node_count() != g.node_count())
        fail(ErrorCode::AmbientMismatch, "cut set and graph differ in node count");
    std::vector<int> out;
    out.reserve(g.edge_count());
    for (const auto& e : g.edges())
        out.push_back(s.contains(e.u) != s.contains(e.v) ? 1 : 0);
    return out;
}

std::vector<int> correlation_vector(const Graph& g, const CutSet& s)
{
    if (s.node_count() != g.node_count())
        fail(ErrorCode::AmbientMismatch, "node set and graph differ in node count");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(g.node_count()) + g.edge_count());
    for (Node x = 1; x <= g.node_count(); ++x)
        out.push_back(s.contains(x) ? 1 : 0);
    for (const auto& e : g.edges())
        out.push_back(s.contains(e.u) && s.contains(e.v) ? 1 : 0);
    return out;
}

Coeff evaluate(const LinearInequality& ineq, std::span<const int> vec)
{
    if (vec.size() != ineq.ambient_dim())
        fail(ErrorCode::AmbientMismatch, "vector has " + std::to_string(vec.size()) + " entries, ambient has "
                                             + std::to_string(ineq.ambient_dim()));
    Coeff sum = 0;
    const auto nodes = ineq.node_coeffs();
    const auto edges = ineq.edge_coeffs();
    for (std::size_t i = 0; i < nodes.size(); ++i)
        sum += nodes[i] * vec[i];
    for (std::size_t i = 0; i < edges.size(); ++i)
        sum += edges[i] * vec[nodes.size() + i];
    return sum;
}

Coeff evaluate(const LinearInequality& ineq, const CutSet& s)
{
    if (ineq.form() == Form::Cut)
        return evaluate(ineq, cut_vector(ineq.graph(), s));
    return evaluate(ineq, correlation_vector(ineq.graph(), s));
}

} // namespace cutfacet
