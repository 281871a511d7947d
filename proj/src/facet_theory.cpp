#include "cutfacet/facet_theory.hpp"

#include "cutfacet/error.hpp"
#include "cutfacet/families.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace cutfacet {

namespace {

int min_degree(const Graph& g)
{
    int best = g.node_count() > 0 ? g.node_count() : 0;
    for (Node x = 1; x <= g.node_count(); ++x)
        best = std::min(best, g.degree(x));
    return best;
}

void require_hkt(const GHPair& pair, const char* what)
{
    if (!pair.in_hkt_form())
        fail(ErrorCode::InvalidArgument, std::string(what) + " needs H in H_{k,t} form");
}

void require_cycle_low(const GHPair& pair, const Cycle4& cycle)
{
    for (Node c : cycle.nodes())
        if (c > pair.k())
            fail(ErrorCode::CycleNodeTooHigh, "cycle node " + std::to_string(c) + " exceeds k = " + std::to_string(pair.k()));
}

bool edge_has_endpoint(const Edge& e, Node x)
{
    return e.u == x || e.v == x;
}

/// Accumulates node sets as bitmasks over a fixed node count.
class SetBuilder {
public:
    SetBuilder(const GHPair& pair, int node_count) : pair_(pair), n_(node_count) {}

    SetBuilder& node(Node x)
    {
        mask_ |= std::uint64_t{1} << (x - 1);
        return *this;
    }
    /// The whole component containing x.
    SetBuilder& comp(Node x)
    {
        for (Node y : pair_.component(pair_.component_of(x)))
            node(y);
        return *this;
    }
    CutSet done() const { return CutSet(n_, mask_); }

private:
    const GHPair& pair_;
    int n_;
    std::uint64_t mask_ = 0;
};

/// Root test for I(G,H): S ⊆ V given as a mask over 1..n.
bool is_predicted_I_root(const GHPair& pair, std::uint64_t mask)
{
    const auto in = [&](Node x) { return ((mask >> (x - 1)) & 1U) != 0; };
    std::vector<int> inside;
    for (int i = 1; i <= pair.k(); ++i) {
        const auto& comp = pair.component(i);
        if (std::all_of(comp.begin(), comp.end(), in))
            inside.push_back(i);
    }
    std::vector<Edge> edges_in;
    for (const auto& e : pair.g().edges())
        if (in(e.u) && in(e.v))
            edges_in.push_back(e);

    if (inside.size() == 1)
        return edges_in.empty();
    if (inside.size() == 2)
        return edges_in.size() == 1 && edges_in.front() == pair.cross_edge(inside[0], inside[1]);
    return false;
}

/// Smallest cycle node j that is free and whose cross edge to i ends at j+k.
std::optional<int> free_link(const GHPair& pair, const Cycle4& cycle, Node i)
{
    std::optional<int> best;
    for (int lambda = 1; lambda <= 4; ++lambda) {
        const Node j = cycle.at(lambda);
        if (!is_free(j, cycle, pair))
            continue;
        if (!edge_has_endpoint(pair.cross_edge(pair.component_of(i), pair.component_of(j)), j + pair.k()))
            continue;
        if (!best || j < cycle.at(*best))
            best = lambda;
    }
    return best;
}

/// Positions lambda whose cross edge e_{i c_lambda} ends at node x of V_i.
std::vector<int> cycle_edges_at(const GHPair& pair, const Cycle4& cycle, Node i, Node x)
{
    std::vector<int> out;
    for (int lambda = 1; lambda <= 4; ++lambda)
        if (pair.cross_endpoint(pair.component_of(i), pair.component_of(cycle.at(lambda))) == x)
            out.push_back(lambda);
    return out;
}

} // namespace

bool facet1_condition(const GHPair& pair)
{
    return pair.k() >= 3 && min_degree(pair.g()) >= 2;
}

bool is_free(Node i, const Cycle4& cycle, const GHPair& pair)
{
    require_hkt(pair, "is_free");
    const Node j = cycle.opposite(i);
    if (i < 1 || i > pair.t())
        return false;
    return edge_has_endpoint(pair.cross_edge(pair.component_of(i), pair.component_of(j)), i + pair.k());
}

Facet2Condition facet2_condition(const GHPair& pair, const Cycle4& cycle)
{
    require_hkt(pair, "facet2_condition");
    require_cycle_low(pair, cycle);
    Facet2Condition out;
    out.k_at_least_4 = pair.k() >= 4;
    out.min_degree_two = min_degree(pair.g()) >= 2;
    out.unmatched_linked = true;
    out.matched_covered = true;

    const int k = pair.k();
    const int t = pair.t();
    for (Node i = 1; i <= k; ++i) {
        if (cycle.contains(i))
            continue;
        const bool linked = free_link(pair, cycle, i).has_value();
        if (i > t) {
            if (!linked) {
                out.unmatched_linked = false;
                out.failing_nodes.push_back(i);
            }
            continue;
        }
        const bool split_two_two = cycle_edges_at(pair, cycle, i, i).size() == 2;
        if (!split_two_two && !linked) {
            out.matched_covered = false;
            out.failing_nodes.push_back(i);
        }
    }
    return out;
}

RootSet predicted_roots_I(const GHPair& pair)
{
    const int n = pair.n();
    if (n > 24)
        fail(ErrorCode::TooLarge, "predicted roots enumerate 2^n subsets");
    RootSet out;
    out.node_count = n + 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        if (is_predicted_I_root(pair, mask))
            out.roots.emplace_back(n + 1, mask);
    return out;
}

RootSet predicted_roots_I_prime(const GHPair& pair, const Cycle4& cycle)
{
    const int n = pair.n();
    if (n > 24)
        fail(ErrorCode::TooLarge, "predicted roots enumerate 2^n subsets");
    const std::uint64_t extra = std::uint64_t{1} << (n + 1);  // node n+2
    std::uint64_t cycle_mask = 0;
    for (Node c : cycle.nodes())
        cycle_mask |= std::uint64_t{1} << (c - 1);

    std::set<CutSet> found;
    const auto emit = [&](std::uint64_t mask) { found.insert(CutSet(n + 2, mask).canonical()); };
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (!is_predicted_I_root(pair, mask))
            continue;
        emit(mask);
        if (std::popcount(mask & cycle_mask) == 2)
            emit(mask | extra);
    }
    for (int skip = 1; skip <= 4; ++skip) {
        SetBuilder s(pair, n + 2);
        for (int lambda = 1; lambda <= 4; ++lambda)
            if (lambda != skip)
                s.comp(cycle.at(lambda));
        emit(s.node(n + 2).done().mask());
    }
    return {n + 2, {found.begin(), found.end()}};
}

Decomposition decompose_degenerate(const GHPair& pair)
{
    require_hkt(pair, "decompose_degenerate");
    const int k = pair.k();
    const int t = pair.t();
    const int n = pair.n();

    Node u = 0;
    for (Node x = 1; x <= n && u == 0; ++x)
        if (pair.g().degree(x) <= 1 && !pair.is_singleton(pair.component_of(x)))
            u = x;
    if (u == 0)
        fail(ErrorCode::NoDegenerateNode, "no matched node has degree at most one in G");

    // Swap component of u with component t, then put u on the k+t side.
    const int i = pair.component_of(u);
    std::vector<Node> images(static_cast<std::size_t>(n));
    for (Node x = 1; x <= n; ++x)
        images[static_cast<std::size_t>(x - 1)] = x;
    const auto swap_nodes = [&](Node a, Node b) {
        std::swap(images[static_cast<std::size_t>(a - 1)], images[static_cast<std::size_t>(b - 1)]);
    };
    if (i != t) {
        swap_nodes(i, t);
        swap_nodes(i + k, t + k);
    }
    Permutation perm(images);
    if (perm(u) == t) {
        std::vector<Node> flip(static_cast<std::size_t>(n));
        for (Node x = 1; x <= n; ++x)
            flip[static_cast<std::size_t>(x - 1)] = x == t ? t + k : (x == t + k ? t : x);
        perm = Permutation(std::move(flip)).after(perm);
    }

    Decomposition out;
    out.perm = perm;
    out.relabeled = permute(pair, perm);
    const Node last = k + t;
    const auto nbrs = out.relabeled.g().neighbors(last);
    out.v = nbrs.size() == 1 ? nbrs.front() : n + 1;
    out.triangle = triangle(n + 1, last, out.v, t);

    const auto g_contracted = contract(out.relabeled.g(), t, last);
    out.contracted = validate_gh(g_contracted.graph, build_H(k, t - 1));

    // build_I(contracted) lives on K_n with apex n; embed with apex n+1.
    const auto small = build_I(out.contracted);
    out.contracted_I = LinearInequality::cut_form(n + 1);
    for (const auto& [e, c] : small.edge_terms()) {
        const Node a = e.u == n ? n + 1 : e.u;
        const Node b = e.v == n ? n + 1 : e.v;
        out.contracted_I.set_edge_coeff(a, b, c);
    }
    out.contracted_I.set_rhs(small.rhs());

    const auto whole = build_I(out.relabeled);
    auto sum = out.contracted_I;
    for (const auto& [e, c] : out.triangle.edge_terms())
        sum.add_edge_coeff(e.u, e.v, c);
    sum.set_rhs(out.triangle.rhs() + out.contracted_I.rhs());
    out.sum_identity_holds = sum == whole;
    return out;
}

WitnessFamily witness_sets_facet1(const GHPair& pair)
{
    require_hkt(pair, "witness_sets_facet1");
    if (!facet1_condition(pair) || pair.t() < 1)
        fail(ErrorCode::ConditionNotMet, "needs k >= 3, minimum degree two and t >= 1");
    const int k = pair.k();
    const int t = pair.t();
    const int n = pair.n();
    const Graph& g = pair.g();

    WitnessFamily out;
    out.node_count = n + 1;
    const auto add = [&](std::string tag, const SetBuilder& s) {
        out.tags.push_back(std::move(tag));
        out.sets.push_back(s.done());
    };

    const auto p = g.neighbors(t + k);
    add("T1", SetBuilder(pair, n + 1).node(t).comp(p[0]).comp(p[1]));
    const auto q = g.neighbors(t);
    add("T2", SetBuilder(pair, n + 1).node(t + k).comp(q[0]).comp(q[1]));

    for (int i = 1; i <= k; ++i) {
        if (i == t)
            continue;
        const bool at_partner = edge_has_endpoint(pair.cross_edge(i, t), t + k);
        add("T3_" + std::to_string(i), SetBuilder(pair, n + 1).node(at_partner ? t : t + k).comp(i));
    }

    for (int i = 1; i <= t - 1; ++i) {
        const Node u = pair.cross_endpoint(i, t);
        const Node u_bar = u == i ? i + k : i;
        Node v = 0;
        for (Node y : g.neighbors(u))
            if (pair.component_of(y) != t) {
                v = y;
                break;
            }
        const int j = pair.component_of(v);
        const Node w_bar = pair.cross_endpoint(t, j) == t ? t + k : t;
        add("T4_" + std::to_string(i), SetBuilder(pair, n + 1).node(u_bar).node(w_bar).comp(v));
    }
    return out;
}

WitnessFamily witness_sets_facet2(const GHPair& pair, const Cycle4& cycle)
{
    const auto cond = facet2_condition(pair, cycle);
    if (!cond.holds())
        fail(ErrorCode::ConditionNotMet, "the sufficient condition for I'(G,H,C) does not hold");
    const int k = pair.k();
    const int t = pair.t();
    const int n = pair.n();
    const Node top = n + 2;
    const auto c = [&](int lambda) { return cycle.at(lambda); };

    WitnessFamily out;
    out.node_count = n + 2;
    const auto start = [&] { return SetBuilder(pair, n + 2); };
    const auto add = [&](std::string tag, const SetBuilder& s) {
        out.tags.push_back(std::move(tag));
        out.sets.push_back(s.done());
    };

    add("T1_1", start().comp(c(1)).comp(c(2)).node(top));
    add("T1_2", start().comp(c(1)).comp(c(3)).node(top));
    add("T1_3", start().comp(c(1)).comp(c(4)).node(top));
    add("T1_4", start().comp(c(2)).comp(c(3)).node(top));
    add("T1_5", start().comp(c(1)).comp(c(2)).comp(c(3)).node(top));

    for (int lambda = 1; lambda <= 4; ++lambda)
        if (c(lambda) <= t)
            add("T2_" + std::to_string(lambda),
                start().comp(c(cyclic_add(lambda, 1))).comp(c(cyclic_add(lambda, 3))).node(c(lambda) + k).node(top));

    for (Node i = t + 1; i <= k; ++i) {
        if (cycle.contains(i))
            continue;
        const int lambda = *free_link(pair, cycle, i);
        add("T3_" + std::to_string(i), start().comp(c(cyclic_add(lambda, 2))).node(c(lambda)).node(i).node(top));
    }

    for (Node i = 1; i <= t; ++i) {
        if (cycle.contains(i))
            continue;
        const auto at_i = cycle_edges_at(pair, cycle, i, i);
        const auto at_partner = cycle_edges_at(pair, cycle, i, i + k);
        const std::string suffix = std::to_string(i);
        if (at_i.size() == 2) {
            add("T4_" + suffix, start().node(i).node(top).comp(c(at_partner[0])).comp(c(at_partner[1])));
            add("T5_" + suffix, start().node(i + k).node(top).comp(c(at_i[0])).comp(c(at_i[1])));
            continue;
        }
        const Node u = at_i.size() <= 1 ? i : i + k;
        const int lambda = *free_link(pair, cycle, i);
        add("T4_" + suffix, start().comp(c(cyclic_add(lambda, 2))).node(c(lambda)).node(i).node(i + k).node(top));
        const auto at_u = u == i ? at_i : at_partner;
        const auto touches = [&](int mu) { return std::find(at_u.begin(), at_u.end(), mu) != at_u.end(); };
        const int mu = (!touches(1) && !touches(3)) ? 1 : 2;
        add("T5_" + suffix, start().comp(c(mu)).comp(c(mu + 2)).node(u).node(top));
    }
    return out;
}

LinearInequality lift_target(const GHPair& pair)
{
    require_hkt(pair, "lift_target");
    if (pair.t() < 1)
        fail(ErrorCode::ConditionNotMet, "lifting along (t, t+k) needs t >= 1");
    const std::vector<Node> root{pair.t(), pair.t() + pair.k()};
    return switch_by(build_I(pair), CutSet::from_members(pair.n() + 1, root));
}

LiftWitness convert_witness_for_lift(const WitnessFamily& family, const GHPair& pair)
{
    const int n = pair.n();
    const int t = pair.t();
    const int k = pair.k();
    if (t < 1 || family.node_count != n + 1 || family.sets.size() != static_cast<std::size_t>(n))
        fail(ErrorCode::MalformedFamily, "expected n sets over n+1 nodes with t >= 1");

    const std::uint64_t pair_mask = (std::uint64_t{1} << (t - 1)) | (std::uint64_t{1} << (t + k - 1));
    LiftWitness out;
    out.u = t;
    out.v = t + k;
    for (const auto& s : family.sets) {
        if (s.contains(t) == s.contains(t + k))
            fail(ErrorCode::MalformedFamily, "every set must hold exactly one of t and t+k");
        const CutSet flipped(n + 1, s.mask() ^ pair_mask);
        out.sets.push_back(s.contains(t) ? flipped : flipped.complement());
    }
    return out;
}

} // namespace cutfacet
