#include "cutfacet/transforms.hpp"

#include "cutfacet/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace cutfacet {

namespace {

void require_cut_form(const LinearInequality& ineq, const char* what)
{
    if (ineq.form() != Form::Cut)
        fail(ErrorCode::AmbientMismatch, std::string(what) + " needs a cut-form inequality");
}

} // namespace

LinearInequality switch_by(const LinearInequality& ineq, const CutSet& s)
{
    require_cut_form(ineq, "switching");
    if (s.node_count() != ineq.node_count())
        fail(ErrorCode::AmbientMismatch, "cut is over " + std::to_string(s.node_count()) + " nodes, inequality over "
                                             + std::to_string(ineq.node_count()));
    LinearInequality out = ineq;
    out.set_rhs(ineq.rhs() - evaluate(ineq, s));
    for (const auto& e : ineq.graph().edges())
        if (s.contains(e.u) != s.contains(e.v))
            out.set_edge_coeff(e.u, e.v, -ineq.edge_coeff(e.u, e.v));
    return out;
}

LinearInequality permute(const LinearInequality& ineq, const Permutation& perm)
{
    if (perm.size() != ineq.node_count())
        fail(ErrorCode::NotBijection, "map has " + std::to_string(perm.size()) + " entries, inequality has "
                                          + std::to_string(ineq.node_count()) + " nodes");
    const Graph g = permute(ineq.graph(), perm);
    LinearInequality out = ineq.form() == Form::Cut ? LinearInequality::cut_form(g)
                                                    : LinearInequality::correlation_form(g);
    for (const auto& [e, c] : ineq.edge_terms())
        out.set_edge_coeff(perm(e.u), perm(e.v), c);
    if (ineq.form() == Form::Correlation)
        for (Node x = 1; x <= ineq.node_count(); ++x)
            out.set_node_coeff(perm(x), ineq.node_coeff(x));
    out.set_rhs(ineq.rhs());
    return out;
}

Collapse collapse(const LinearInequality& ineq, Node u, Node v)
{
    require_cut_form(ineq, "collapsing");
    if (u == v)
        fail(ErrorCode::SameNode, "cannot collapse node " + std::to_string(u) + " with itself");
    const int n = ineq.node_count();
    if (n < 3)
        fail(ErrorCode::BadParameters, "collapsing needs at least three nodes");
    if (!ineq.graph().has_node(u) || !ineq.graph().has_node(v))
        fail(ErrorCode::InvalidArgument, "collapse nodes outside 1.." + std::to_string(n));
    if (!ineq.graph().is_complete())
        fail(ErrorCode::AmbientMismatch, "collapsing is defined on complete graphs only");

    const auto contracted = contract(ineq.graph(), u, v);
    Collapse out{LinearInequality::cut_form(n - 1), contracted.node_map};
    for (const auto& [e, c] : ineq.edge_terms()) {
        const Node a = out.node_map[static_cast<std::size_t>(e.u - 1)];
        const Node b = out.node_map[static_cast<std::size_t>(e.v - 1)];
        if (a != b)
            out.ineq.add_edge_coeff(a, b, c);
    }
    out.ineq.set_rhs(ineq.rhs());
    return out;
}

bool check_lift(const LinearInequality& ineq, const LiftWitness& witness, const EngineOptions& options)
{
    require_cut_form(ineq, "the lifting check");
    if (ineq.rhs() != 0)
        fail(ErrorCode::RhsNotZero, "the lifting lemma applies to a^T x <= 0");
    const int n = ineq.node_count();
    if (witness.u == witness.v || !ineq.graph().has_node(witness.u) || !ineq.graph().has_node(witness.v))
        fail(ErrorCode::MalformedWitness, "u and v must be distinct nodes of the inequality");
    if (witness.sets.size() != static_cast<std::size_t>(n - 1))
        fail(ErrorCode::MalformedWitness, "expected " + std::to_string(n - 1) + " sets, got "
                                              + std::to_string(witness.sets.size()));
    for (const auto& s : witness.sets)
        if (s.node_count() != n || s.contains(witness.u) || !s.contains(witness.v))
            fail(ErrorCode::MalformedWitness, "every set must exclude u and contain v");

    if (!is_valid(ineq, options).valid)
        return false;
    if (!facet_report(collapse(ineq, witness.u, witness.v).ineq, options).is_facet)
        return false;

    IntMatrix incidence;
    for (const auto& s : witness.sets) {
        if (evaluate(ineq, s) != ineq.rhs())
            return false;
        std::vector<Coeff> row(static_cast<std::size_t>(n));
        for (Node x = 1; x <= n; ++x)
            row[static_cast<std::size_t>(x - 1)] = s.contains(x) ? 1 : 0;
        incidence.push_back(std::move(row));
    }
    return linear_rank(incidence) == witness.sets.size();
}

TriangularElimination triangular_eliminate(const LinearInequality& ineq, const Graph& g, Node u, Node u_prime,
                                           std::span<const Node> w_set)
{
    require_cut_form(ineq, "triangular elimination");
    if (ineq.node_count() != g.node_count())
        fail(ErrorCode::AmbientMismatch, "inequality and graph differ in node count");
    if (!g.has_edge(u, u_prime))
        fail(ErrorCode::NotAnEdge, to_string(make_edge(u, u_prime)) + " is not an edge of the graph");
    for (const auto& [e, c] : ineq.edge_terms())
        if (!g.has_edge(e.u, e.v))
            fail(ErrorCode::UnsupportedCoefficient, "coefficient on " + to_string(e) + " is outside the graph");

    TriangularElimination out;
    out.graph = detour_extension(g, u, u_prime, w_set);
    out.new_node = g.node_count() + 1;
    out.ineq = LinearInequality::cut_form(out.graph);

    const Coeff a = ineq.edge_coeff(u, u_prime);
    const Edge removed = make_edge(u, u_prime);
    for (const auto& [e, c] : ineq.edge_terms())
        if (e != removed)
            out.ineq.set_edge_coeff(e.u, e.v, c);
    out.ineq.add_edge_coeff(u, out.new_node, a);
    out.ineq.add_edge_coeff(u_prime, out.new_node, -std::abs(a));
    out.ineq.set_rhs(ineq.rhs());
    out.degenerate = a == 0;

    std::set<Edge> excluded{removed};
    for (Node w : w_set) {
        excluded.insert(make_edge(u, w));
        excluded.insert(make_edge(u_prime, w));
    }
    for (const auto& [e, c] : ineq.edge_terms())
        if (!excluded.contains(e)) {
            out.hypothesis_holds = true;
            break;
        }
    return out;
}

Graph suspension(const Graph& g)
{
    const Node z = g.node_count() + 1;
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (Node x = 1; x < z; ++x)
        edges.push_back({x, z});
    return Graph(z, std::move(edges));
}

CovarianceResult covariance_map(const LinearInequality& ineq)
{
    if (ineq.form() != Form::Correlation)
        fail(ErrorCode::AmbientMismatch, "covariance mapping needs a correlation-form inequality");
    const Graph& g = ineq.graph();
    const Node z = g.node_count() + 1;

    // Work with doubled coefficients, halve at the end when possible.
    LinearInequality doubled = LinearInequality::cut_form(suspension(g));
    for (Node x = 1; x < z; ++x)
        doubled.add_edge_coeff(x, z, 2 * ineq.node_coeff(x));
    for (const auto& [e, c] : ineq.edge_terms()) {
        doubled.add_edge_coeff(e.u, z, c);
        doubled.add_edge_coeff(e.v, z, c);
        doubled.add_edge_coeff(e.u, e.v, -c);
    }
    doubled.set_rhs(2 * ineq.rhs());

    const auto coeffs = doubled.edge_coeffs();
    const bool all_even = std::all_of(coeffs.begin(), coeffs.end(), [](Coeff c) { return c % 2 == 0; });
    if (!all_even)
        return {std::move(doubled), 2};

    LinearInequality halved = LinearInequality::cut_form(doubled.graph());
    for (const auto& [e, c] : doubled.edge_terms())
        halved.set_edge_coeff(e.u, e.v, c / 2);
    halved.set_rhs(doubled.rhs() / 2);
    return {std::move(halved), 1};
}

} // namespace cutfacet
