#include "cutfacet/survey.hpp"

#include "cutfacet/error.hpp"
#include "cutfacet/facet_theory.hpp"
#include "cutfacet/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <thread>

namespace cutfacet {

namespace {

constexpr std::array<std::pair<Theorem, std::string_view>, 6> theorem_names{{
    {Theorem::Facet1, "facet1"},
    {Theorem::Facet2, "facet2"},
    {Theorem::Prop1Roots, "prop1-roots"},
    {Theorem::Prop9Roots, "prop9-roots"},
    {Theorem::LiftWitness, "lift-witness"},
    {Theorem::Decompose, "decompose"},
}};

std::string flag(std::string_view name, bool value)
{
    return std::string(name) + (value ? "=true" : "=false");
}

std::string count(std::string_view name, std::size_t value)
{
    return std::string(name) + "=" + std::to_string(value);
}

/// H_{k,t} relabeling that also keeps every cycle node among 1..k.
struct Normalized {
    GHPair pair;
    std::optional<Cycle4> cycle;
};

Normalized normalize(const GHPair& pair, const std::optional<Cycle4>& cycle)
{
    auto relabeled = relabel_to_hkt(pair);
    Permutation perm = relabeled.perm;
    const int k = pair.k();
    if (cycle) {
        std::vector<Node> swap(static_cast<std::size_t>(pair.n()));
        for (Node x = 1; x <= pair.n(); ++x)
            swap[static_cast<std::size_t>(x - 1)] = x;
        for (Node c : cycle->nodes()) {
            const Node image = perm(c);
            if (image > k) {
                swap[static_cast<std::size_t>(image - 1)] = image - k;
                swap[static_cast<std::size_t>(image - k - 1)] = image;
            }
        }
        perm = Permutation(std::move(swap)).after(perm);
    }
    Normalized out{permute(pair, perm), std::nullopt};
    if (cycle)
        out.cycle = permute(*cycle, out.pair, perm);
    return out;
}

bool is_subset(const RootSet& small, const RootSet& big)
{
    return std::all_of(small.roots.begin(), small.roots.end(), [&](const CutSet& s) { return big.contains(s); });
}

CheckResult run_check(Theorem theorem, const GHPair& pair, const std::optional<Cycle4>& cycle,
                      const EngineOptions& options)
{
    CheckResult out;
    out.theorem = theorem;
    switch (theorem) {
    case Theorem::Facet1: {
        const bool condition = facet1_condition(pair);
        const bool facet = facet_report(build_I(pair), options).is_facet;
        out.predicted = flag("condition", condition);
        out.observed = flag("facet", facet);
        out.applicable = pair.k() >= 3;
        out.agree = !out.applicable || condition == facet;
        break;
    }
    case Theorem::Facet2: {
        const auto condition = facet2_condition(pair, *cycle);
        const bool facet = facet_report(build_I_prime(pair, *cycle), options).is_facet;
        out.predicted = flag("condition", condition.holds());
        out.observed = flag("facet", facet);
        out.agree = !condition.holds() || facet;
        out.converse_candidate = !condition.holds() && facet;
        break;
    }
    case Theorem::Prop1Roots: {
        const auto predicted = predicted_roots_I(pair);
        const auto ineq = build_I(pair);
        const auto valid = is_valid(ineq, options);
        out.predicted = count("roots", predicted.size());
        if (!valid.valid) {
            out.observed = "valid=false";
            out.agree = false;
            break;
        }
        const auto found = roots(ineq, options);
        out.observed = count("roots", found.size());
        out.agree = predicted.roots == found.roots;
        break;
    }
    case Theorem::Prop9Roots: {
        const auto predicted = predicted_roots_I_prime(pair, *cycle);
        const auto ineq = build_I_prime(pair, *cycle);
        out.predicted = count("roots", predicted.size());
        if (!is_valid(ineq, options).valid) {
            out.observed = "valid=false";
            out.agree = false;
            break;
        }
        const auto found = roots(ineq, options);
        out.observed = count("roots", found.size());
        out.agree = is_subset(predicted, found);
        break;
    }
    case Theorem::LiftWitness: {
        out.applicable = facet1_condition(pair) && pair.t() >= 1;
        const bool facet = facet_report(build_I(pair), options).is_facet;
        out.observed = flag("facet", facet);
        if (!out.applicable) {
            out.predicted = "check_lift=n/a";
            break;
        }
        const auto witness = convert_witness_for_lift(witness_sets_facet1(pair), pair);
        const bool lifted = check_lift(lift_target(pair), witness, options);
        out.predicted = flag("check_lift", lifted);
        out.agree = lifted && facet;
        break;
    }
    case Theorem::Decompose: {
        const bool facet = facet_report(build_I(pair), options).is_facet;
        out.observed = flag("facet", facet);
        std::optional<Decomposition> d;
        try {
            d = decompose_degenerate(pair);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NoDegenerateNode)
                throw;
        }
        if (!d) {
            out.applicable = false;
            out.predicted = "degenerate=false";
            break;
        }
        out.predicted = flag("sum_identity", d->sum_identity_holds);
        out.agree = d->sum_identity_holds && !facet;
        break;
    }
    }
    return out;
}

} // namespace

std::string_view theorem_name(Theorem theorem)
{
    for (const auto& [t, name] : theorem_names)
        if (t == theorem)
            return name;
    return "?";
}

Theorem parse_theorem(std::string_view name)
{
    for (const auto& [t, n] : theorem_names)
        if (n == name)
            return t;
    fail(ErrorCode::InvalidArgument, "unknown theorem '" + std::string(name) + "'");
}

bool needs_cycle(Theorem theorem)
{
    return theorem == Theorem::Facet2 || theorem == Theorem::Prop9Roots;
}

bool asserts_equivalence(Theorem theorem)
{
    return theorem != Theorem::Facet2;
}

CheckResult check_theorem(Theorem theorem, const GHPair& pair, const std::optional<Cycle4>& cycle,
                          const EngineOptions& options)
{
    if (needs_cycle(theorem) && !cycle)
        fail(ErrorCode::InvalidArgument, std::string(theorem_name(theorem)) + " needs a 4-cycle");
    const auto normalized = normalize(pair, needs_cycle(theorem) ? cycle : std::nullopt);
    return run_check(theorem, normalized.pair, normalized.cycle, options);
}

std::vector<GHPair> enumerate_hkt_pairs(int k, int t)
{
    if (k < 1 || t < 0 || t > k)
        fail(ErrorCode::BadParameters, "need 0 <= t <= k and k >= 1");
    const int n = k + t;
    const Graph h = build_H(k, t);
    const auto members = [&](int i) {
        return i <= t ? std::vector<Node>{i, k + i} : std::vector<Node>{i};
    };

    struct Slot {
        std::vector<Node> left;
        std::vector<Node> right;
        std::size_t radix() const { return left.size() * right.size(); }
    };
    std::vector<Slot> slots;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            slots.push_back({members(i), members(j)});

    std::vector<GHPair> out;
    std::vector<std::size_t> digit(slots.size(), 0);
    while (true) {
        std::vector<Edge> edges;
        edges.reserve(slots.size());
        for (std::size_t s = 0; s < slots.size(); ++s) {
            const auto& slot = slots[s];
            const std::size_t r = slot.right.size();
            edges.push_back(make_edge(slot.left[digit[s] / r], slot.right[digit[s] % r]));
        }
        out.push_back(validate_gh(Graph(n, std::move(edges)), h));

        std::size_t pos = slots.size();
        while (pos > 0) {
            --pos;
            if (++digit[pos] < slots[pos].radix())
                break;
            digit[pos] = 0;
            if (pos == 0)
                return out;
        }
        if (slots.empty())
            return out;
    }
}

std::vector<Cycle4> enumerate_cycles(const GHPair& pair)
{
    const int k = pair.k();
    const Graph& g = pair.g();
    std::vector<Cycle4> out;
    for (Node a = 1; a <= k; ++a)
        for (Node b = a + 1; b <= k; ++b)
            for (Node c = a + 1; c <= k; ++c)
                for (Node d = b + 1; d <= k; ++d) {
                    if (c == b || c == d)
                        continue;
                    if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && g.has_edge(d, a))
                        out.emplace_back(pair, std::array<Node, 4>{a, b, c, d});
                }
    return out;
}

std::string encode_instance(const GHPair& pair)
{
    std::string out = "k=" + std::to_string(pair.k()) + " t=" + std::to_string(pair.t()) + " G=";
    bool first = true;
    for (const auto& e : pair.g().edges()) {
        if (!first)
            out += ',';
        out += std::to_string(e.u) + "-" + std::to_string(e.v);
        first = false;
    }
    return out;
}

SurveyResult survey(Theorem theorem, const SurveyBounds& bounds, const EngineOptions& options)
{
    struct Task {
        std::size_t cell;
        GHPair pair;
        std::optional<Cycle4> cycle;
        std::string name;
    };

    SurveyResult out;
    out.theorem = theorem;
    std::vector<Task> tasks;
    for (int t = std::max(bounds.t_min, 0); t <= std::min(bounds.t_max, bounds.k); ++t) {
        if (bounds.k + t > bounds.max_n)
            continue;
        SurveyCell cell;
        cell.k = bounds.k;
        cell.t = t;
        const std::size_t index = out.cells.size();
        for (auto& pair : enumerate_hkt_pairs(bounds.k, t)) {
            ++cell.instances;
            const std::string name = encode_instance(pair);
            if (!needs_cycle(theorem)) {
                tasks.push_back({index, pair, std::nullopt, name});
                continue;
            }
            for (const auto& cycle : enumerate_cycles(pair)) {
                const auto& c = cycle.nodes();
                tasks.push_back({index, pair, cycle,
                                 name + " C=" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                                     std::to_string(c[2]) + "," + std::to_string(c[3])});
            }
        }
        out.instances += cell.instances;
        out.cells.push_back(cell);
    }

    std::vector<CheckResult> results(tasks.size());
    EngineOptions inner = options;
    inner.threads = 1;
    const auto work = [&](std::size_t worker, std::size_t stride) {
        for (std::size_t i = worker; i < tasks.size(); i += stride) {
            try {
                results[i] = check_theorem(theorem, tasks[i].pair, tasks[i].cycle, inner);
            } catch (const Error& e) {
                results[i].theorem = theorem;
                results[i].observed = std::string("error: ") + e.what();
                results[i].agree = false;
            }
        }
    };
    int workers = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp(workers, 1, std::max(1, static_cast<int>(tasks.size())));
    {
        std::vector<std::jthread> pool;
        for (int w = 1; w < workers; ++w)
            pool.emplace_back(work, static_cast<std::size_t>(w), static_cast<std::size_t>(workers));
        work(0, static_cast<std::size_t>(workers));
    }

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        auto& cell = out.cells[tasks[i].cell];
        const auto& r = results[i];
        ++cell.checks;
        ++out.checks;
        if (!r.applicable)
            ++cell.skipped;
        else if (r.agree)
            ++cell.agree;
        if (!r.agree) {
            ++cell.disagree;
            out.disagreements.push_back({tasks[i].name, r});
        }
        if (r.converse_candidate) {
            ++cell.converse_candidates;
            out.converse_candidates.push_back({tasks[i].name, r});
        }
    }
    const auto by_name = [](const SurveyRow& a, const SurveyRow& b) { return a.instance < b.instance; };
    std::sort(out.disagreements.begin(), out.disagreements.end(), by_name);
    std::sort(out.converse_candidates.begin(), out.converse_candidates.end(), by_name);
    return out;
}

} // namespace cutfacet
