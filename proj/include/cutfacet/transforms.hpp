#ifndef CUTFACET_TRANSFORMS_HPP
#define CUTFACET_TRANSFORMS_HPP

#include "cutfacet/engine.hpp"
#include "cutfacet/inequality.hpp"

#include <span>
#include <vector>

namespace cutfacet {

/// Switching by the cut s: coefficients on cut edges change sign and the
/// rhs becomes a0 - a^T δ(s). Cut form only.
LinearInequality switch_by(const LinearInequality& ineq, const CutSet& s);

/// Coefficient of uv moves to perm(u)perm(v); rhs unchanged.
LinearInequality permute(const LinearInequality& ineq, const Permutation& perm);

struct Collapse {
    LinearInequality ineq;
    /// node_map[x-1] is the label of old node x after the collapse; u and v
    /// both map to the merged node.
    std::vector<Node> node_map;
};

/// (u,v)-collapse on K_N: the merged node takes label min(u,v), a_wi =
/// a_ui + a_vi, the uv term is dropped and labels are made contiguous.
Collapse collapse(const LinearInequality& ineq, Node u, Node v);

/// Certificate data for the lifting lemma.
struct LiftWitness {
    Node u = 0;
    Node v = 0;
    /// |V|-1 sets, each excluding u and containing v.
    std::vector<CutSet> sets;
};

/// True iff the inequality (rhs 0) is valid, its (u,v)-collapse is a facet
/// by brute force, and the witness sets are roots with linearly independent
/// incidence vectors. Throws RhsNotZero or MalformedWitness.
bool check_lift(const LinearInequality& ineq, const LiftWitness& witness, const EngineOptions& options = {});

struct TriangularElimination {
    LinearInequality ineq;  // cut form on the detour extension
    Graph graph;
    Node new_node = 0;
    /// Some edge outside {uu'} ∪ {uw, u'w : w in W} carries a nonzero coefficient.
    bool hypothesis_holds = false;
    /// a_uu' was zero, so nothing but the new node was added.
    bool degenerate = false;
};

/// Adds -a x_uu' + a x_uv - |a| x_u'v <= 0 (a = a_uu', v the new node) to
/// the input, cancelling the uu' term.
TriangularElimination triangular_eliminate(const LinearInequality& ineq, const Graph& g, Node u, Node u_prime,
                                           std::span<const Node> w_set);

struct CovarianceResult {
    LinearInequality ineq;  // cut form on the suspension graph, apex n+1
    Coeff scale = 1;
};

/// p_u = x_Zu, p_uv = (x_Zu + x_Zv - x_uv)/2 with Z = n+1; everything is
/// doubled when a half-integral coefficient would appear.
CovarianceResult covariance_map(const LinearInequality& ineq);

/// G plus an apex n+1 adjacent to every node.
Graph suspension(const Graph& g);

} // namespace cutfacet

#endif
