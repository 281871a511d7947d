#ifndef CUTFACET_FAMILIES_HPP
#define CUTFACET_FAMILIES_HPP

#include "cutfacet/gh_pair.hpp"
#include "cutfacet/inequality.hpp"
#include "cutfacet/transforms.hpp"

#include <utility>
#include <vector>

namespace cutfacet {

/// Integer vector b with entries summing to one.
class HypermetricVector {
public:
    /// Throws SumNotOne, or BadParameters for fewer than three entries.
    explicit HypermetricVector(std::vector<Coeff> b);
    const std::vector<Coeff>& values() const noexcept { return b_; }

private:
    std::vector<Coeff> b_;
};

/// sum_{i<j} b_i b_j x_ij <= 0 on K_N.
LinearInequality hypermetric(const HypermetricVector& b);

/// s+1 ones, then s minus-ones, then zeros, on K_N. Needs N >= 2s+1 >= 3.
LinearInequality pure_gonal(int n, int s);

/// b = (1,...,1,-1,-(N-4)).
LinearInequality hypermetric_thm3(int n);

/// T(u,v;w) <= 0 on K_N.
LinearInequality triangle(int n, Node u, Node v, Node w);

/// The Grishukhin inequality on K_7.
LinearInequality gr7();

/// Pure lifting of Gr7 on K_8: I'(G_6, H_{5,1}, 23-34-45-52) switched by
/// {1,6} and relabeled by gr8_relabeling().
LinearInequality gr8();

/// Collapsing gr8() at this pair gives gr7() exactly.
std::pair<Node, Node> gr8_collapse_pair();

/// 1..7 -> 6,1,2,3,4,7,5.
Permutation gr7_relabeling();
/// gr7_relabeling() extended by 8 -> 8.
Permutation gr8_relabeling();

/// The 6-node graph G_6 with H_{5,1}, recovered from gr7() by undoing the
/// relabeling and the switch by {1,6}.
GHPair g6_pair();

/// I(G,H) on K_{n+1}:
/// sum_E T(u,v;n+1) - sum_F T(u,v;n+1) + 2 sum_{V_i={u}} x_{u,n+1} <= 2.
LinearInequality build_I(const GHPair& pair);

/// build_I plus sum_{u in C} (x_{u,n+1} - x_{u,n+2}), on K_{n+2}.
LinearInequality build_I_prime(const GHPair& pair, const Cycle4& cycle);

/// Recovers (G,H) from an inequality of the form build_I: G holds the +1
/// edges among 1..N-1, H the -1 edges. Throws BadParameters otherwise.
GHPair reconstruct_gh(const LinearInequality& ineq);

/// Node naming for the Bell inequality material. Correlation form on
/// K_{m,m}: A_i = i, B_j = m+j. Cut form on K'_{1,m,m}: A_i = i,
/// B_j = m+j-1 (2 <= j <= m+1), Z = 2m+1.
struct Imm22Labels {
    int m = 0;
    Node corr_a(int i) const { return i; }
    Node corr_b(int j) const { return m + j; }
    Node a(int i) const { return i; }
    Node b(int j) const { return m + j - 1; }
    Node z() const { return 2 * m + 1; }
};

Graph complete_bipartite(int left, int right);

/// I_mm22 as a correlation-form inequality on K_{m,m}.
LinearInequality build_imm22(int m);

/// K'_{1,m,m} on 2m+1 nodes in the cut-form labeling.
Graph kprime_1mm(int m);

/// covariance_map, switch by {A_1..A_m}, relabel B_j -> B_{m+2-j}. m >= 1.
LinearInequality imm22_pipeline(int m);

/// Direct transcription of the cut-form target on K'_{1,m,m}.
LinearInequality imm22_closed_form(int m);

/// imm22_pipeline(m), checked term-for-term against imm22_closed_form(m). m >= 2.
LinearInequality imm22_cut_form(int m);

/// V = {A_1..A_m, B_2..B_{m+1}}, E = {A_i B_j : i < j}, F = {A_i B_i : 2 <= i <= m}.
GHPair imm22_gh_pair(int m);

/// I(G',H') carried through the two triangular eliminations back to
/// K'_{1,m,m}. m >= 3.
struct Imm22Chain {
    GHPair contracted;                 // (G', H') on 2m-2 nodes
    LinearInequality start;            // I(G', H') on K_{2m-1}
    TriangularElimination first;
    TriangularElimination second;
    Permutation to_cut_labels;         // chain labels -> Imm22Labels cut form
    LinearInequality result;           // on K'_{1,m,m}
};

Imm22Chain imm22_elimination_chain(int m);

} // namespace cutfacet

#endif
