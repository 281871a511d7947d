#ifndef CUTFACET_ENGINE_HPP
#define CUTFACET_ENGINE_HPP

#include "cutfacet/inequality.hpp"

#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

namespace cutfacet {

struct EngineOptions {
    /// Worker count for cut enumeration; 0 means hardware concurrency.
    int threads = 1;
    /// Hard cap on the node count of an enumeration.
    int max_nodes = 24;
};

/// The canonical cuts of K_N (node N never a member) with bitmask in
/// [first, last), in ascending order.
class CutRange {
public:
    class iterator {
    public:
        using value_type = CutSet;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        iterator(int n, std::uint64_t mask) : n_(n), mask_(mask) {}
        CutSet operator*() const { return CutSet(n_, mask_); }
        iterator& operator++() { ++mask_; return *this; }
        iterator operator++(int) { auto tmp = *this; ++mask_; return tmp; }
        bool operator==(const iterator& other) const { return mask_ == other.mask_; }

    private:
        int n_ = 0;
        std::uint64_t mask_ = 0;
    };

    CutRange(int node_count, std::uint64_t first, std::uint64_t last);

    int node_count() const noexcept { return n_; }
    std::uint64_t first() const noexcept { return first_; }
    std::uint64_t last() const noexcept { return last_; }
    std::uint64_t size() const noexcept { return last_ - first_; }

    iterator begin() const { return {n_, first_}; }
    iterator end() const { return {n_, last_}; }

    /// Contiguous, disjoint sub-ranges covering this one.
    std::vector<CutRange> split(int parts) const;

private:
    int n_;
    std::uint64_t first_;
    std::uint64_t last_;
};

/// All 2^(N-1) canonical cuts of N nodes. Throws TooLarge beyond max_nodes.
CutRange enumerate_cuts(int node_count, const EngineOptions& options = {});

struct ValidityResult {
    bool valid = true;
    /// Smallest violating canonical cut, when invalid.
    std::optional<CutSet> violating_cut;
};

ValidityResult is_valid(const LinearInequality& ineq, const EngineOptions& options = {});

/// Canonical cuts achieving equality, ascending by bitmask.
struct RootSet {
    int node_count = 0;
    std::vector<CutSet> roots;

    std::size_t size() const noexcept { return roots.size(); }
    bool contains(const CutSet& s) const;
};

/// Throws NotValid for inequalities that are not valid.
RootSet roots(const LinearInequality& ineq, const EngineOptions& options = {});

using IntMatrix = std::vector<std::vector<Coeff>>;

/// Exact rank over the rationals (fraction-free integer elimination).
std::size_t linear_rank(const IntMatrix& vectors);
/// Maximum number of affinely independent vectors; 0 for no input.
std::size_t affine_rank(const IntMatrix& vectors);

struct FacetReport {
    bool valid = false;
    std::optional<CutSet> violating_cut;
    std::size_t ambient_dim = 0;
    std::size_t root_count = 0;
    std::size_t affine_rank = 0;
    bool is_facet = false;
    /// Factor applied by the covariance mapping for correlation-form input.
    Coeff scale = 1;

    bool operator==(const FacetReport&) const = default;
};

/// Invalid inequalities report valid=false, root_count=0, affine_rank=0.
FacetReport facet_report(const LinearInequality& ineq, const EngineOptions& options = {});

/// True iff every root of a is a root of b. Both must be valid.
bool face_contained_in(const LinearInequality& a, const LinearInequality& b, const EngineOptions& options = {});

} // namespace cutfacet

#endif
