#ifndef CUTFACET_FACET_THEORY_HPP
#define CUTFACET_FACET_THEORY_HPP

#include "cutfacet/engine.hpp"
#include "cutfacet/gh_pair.hpp"
#include "cutfacet/transforms.hpp"

#include <string>
#include <vector>

namespace cutfacet {

/// k >= 3 and every node of G has degree at least two.
bool facet1_condition(const GHPair& pair);

/// i is matched (i <= t) and the cross edge from i to the opposite cycle
/// node ends at i+k. The pair must be in H_{k,t} form.
bool is_free(Node i, const Cycle4& cycle, const GHPair& pair);

/// Per-condition breakdown of the sufficient condition for I'(G,H,C).
struct Facet2Condition {
    bool k_at_least_4 = false;
    bool min_degree_two = false;        // (i)
    bool unmatched_linked = false;      // (ii)
    bool matched_covered = false;       // (iii)
    /// Nodes outside C that break (ii) or (iii).
    std::vector<Node> failing_nodes;

    bool holds() const noexcept { return k_at_least_4 && min_degree_two && unmatched_linked && matched_covered; }
};

/// Pair in H_{k,t} form with cycle nodes among 1..k (CycleNodeTooHigh).
Facet2Condition facet2_condition(const GHPair& pair, const Cycle4& cycle);

/// Subsets S of V with exactly one component inside S and no G-edge in S,
/// or exactly two components i1,i2 inside S and e_{i1 i2} the only G-edge
/// in S; as canonical cuts of K_{n+1}.
RootSet predicted_roots_I(const GHPair& pair);

/// The sufficient root conditions for I'(G,H,C), as canonical cuts of K_{n+2}.
RootSet predicted_roots_I_prime(const GHPair& pair, const Cycle4& cycle);

struct Decomposition {
    /// Relabeling that moves the degree <= 1 node to k+t (H_{k,t} preserved).
    Permutation perm;
    Node v = 0;
    GHPair relabeled;
    LinearInequality triangle;      // T(k+t, v; t) <= 0 on K_{n+1}
    GHPair contracted;              // (G/(t,k+t), H_{k,t-1})
    LinearInequality contracted_I;  // build_I(contracted), embedded in K_{n+1}
    bool sum_identity_holds = false;
};

/// Throws NoDegenerateNode when no matched node has G-degree <= 1.
Decomposition decompose_degenerate(const GHPair& pair);

/// Tagged node subsets used as lifting witnesses.
struct WitnessFamily {
    int node_count = 0;
    std::vector<std::string> tags;
    std::vector<CutSet> sets;
};

/// T1, T2, T3_i (i != t), T4_i (i < t) for I(G,H_{k,t}), t >= 1. Free
/// choices take the smallest admissible node. Throws ConditionNotMet.
WitnessFamily witness_sets_facet1(const GHPair& pair);

/// The n+1 sets T1_1..T1_5, T2_l, T3_i, T4_i, T5_i for I'(G,H_{k,t},C).
/// Throws ConditionNotMet.
WitnessFamily witness_sets_facet2(const GHPair& pair, const Cycle4& cycle);

/// build_I(pair) switched by its root {t, t+k}; rhs 0.
LinearInequality lift_target(const GHPair& pair);

/// T' = T △ {t,t+k} when t in T, else the complement of T △ {t,t+k}
/// within V ∪ {n+1}; (u,v) = (t, t+k). Throws MalformedFamily.
LiftWitness convert_witness_for_lift(const WitnessFamily& family, const GHPair& pair);

} // namespace cutfacet

#endif
