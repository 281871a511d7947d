#ifndef CUTFACET_SURVEY_HPP
#define CUTFACET_SURVEY_HPP

#include "cutfacet/engine.hpp"
#include "cutfacet/gh_pair.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cutfacet {

enum class Theorem { Facet1, Facet2, Prop1Roots, Prop9Roots, LiftWitness, Decompose };

/// facet1, facet2, prop1-roots, prop9-roots, lift-witness, decompose.
std::string_view theorem_name(Theorem theorem);
/// Throws InvalidArgument for unknown names.
Theorem parse_theorem(std::string_view name);
/// Cycle-based checks (facet2, prop9-roots) need a Cycle4.
bool needs_cycle(Theorem theorem);
/// A failed check is a hard failure only where an equivalence (or an
/// unconditional construction) is claimed; facet2 is sufficient-only.
bool asserts_equivalence(Theorem theorem);

struct CheckResult {
    Theorem theorem = Theorem::Facet1;
    bool applicable = true;
    std::string predicted;
    std::string observed;
    bool agree = true;
    /// Condition false while the brute force finds a facet (facet2 only).
    bool converse_candidate = false;
};

/// Compares the structural prediction with brute force on one instance.
/// Pairs are relabeled to H_{k,t} first; the cycle follows the relabeling.
CheckResult check_theorem(Theorem theorem, const GHPair& pair, const std::optional<Cycle4>& cycle,
                          const EngineOptions& options = {});

/// Every (G, H_{k,t}) with one cross edge per component pair, over all
/// endpoint choices, in mixed-radix order (last component pair fastest).
std::vector<GHPair> enumerate_hkt_pairs(int k, int t);

/// 4-cycles through distinct nodes of 1..k present in G, one per cyclic
/// class: c1 smallest and c2 < c4.
std::vector<Cycle4> enumerate_cycles(const GHPair& pair);

/// k t G-edges, e.g. "k=3 t=1 G=1-2,1-3,2-3,3-4".
std::string encode_instance(const GHPair& pair);

struct SurveyBounds {
    int k = 3;
    int t_min = 0;
    int t_max = 3;
    int max_n = 8;
};

struct SurveyRow {
    std::string instance;
    CheckResult result;
};

struct SurveyCell {
    int k = 0;
    int t = 0;
    std::size_t instances = 0;
    std::size_t checks = 0;
    std::size_t skipped = 0;
    std::size_t agree = 0;
    std::size_t disagree = 0;
    std::size_t converse_candidates = 0;
};

struct SurveyResult {
    Theorem theorem = Theorem::Facet1;
    std::vector<SurveyCell> cells;
    /// Sorted by instance encoding.
    std::vector<SurveyRow> disagreements;
    std::vector<SurveyRow> converse_candidates;
    std::size_t instances = 0;
    std::size_t checks = 0;

    std::size_t disagreement_count() const noexcept { return disagreements.size(); }
};

/// Runs check_theorem over every instance within bounds (every cycle class
/// for cycle-based theorems). Instances are spread over options.threads
/// workers; each check enumerates single-threaded.
SurveyResult survey(Theorem theorem, const SurveyBounds& bounds, const EngineOptions& options = {});

} // namespace cutfacet

#endif
