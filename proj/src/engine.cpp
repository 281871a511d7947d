#include "cutfacet/engine.hpp"

#include "cutfacet/error.hpp"
#include "cutfacet/transforms.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <thread>

namespace cutfacet {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

std::int64_t mul_sub(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
{
    std::int64_t ab = 0;
    std::int64_t cd = 0;
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) || __builtin_sub_overflow(ab, cd, &out))
        throw Overflow{};
    return out;
}

BigInt mul_sub(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d)
{
    return a * b - c * d;
}

std::int64_t abs_gcd(std::int64_t a, std::int64_t b)
{
    return std::gcd(a, b);
}

BigInt abs_gcd(const BigInt& a, const BigInt& b)
{
    return boost::multiprecision::gcd(a, b);
}

/// Row echelon form built one row at a time. Each stored row is zero at the
/// pivots of the rows stored before it.
template <class Int>
class Echelon {
public:
    explicit Echelon(std::size_t width) : width_(width) {}

    std::size_t rank() const noexcept { return rows_.size(); }

    bool insert(std::vector<Int> row)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivots_[r];
            if (row[p] == 0)
                continue;
            const Int factor = row[p];
            const Int lead = rows_[r][p];
            for (std::size_t c = 0; c < width_; ++c)
                row[c] = mul_sub(lead, row[c], factor, rows_[r][c]);
            normalize(row);
        }
        const auto it = std::find_if(row.begin(), row.end(), [](const Int& x) { return x != 0; });
        if (it == row.end())
            return false;
        pivots_.push_back(static_cast<std::size_t>(it - row.begin()));
        rows_.push_back(std::move(row));
        return true;
    }

private:
    static void normalize(std::vector<Int>& row)
    {
        Int g = 0;
        for (const auto& x : row)
            if (x != 0)
                g = abs_gcd(g, x);
        if (g > 1)
            for (auto& x : row)
                x /= g;
    }

    std::size_t width_;
    std::vector<std::vector<Int>> rows_;
    std::vector<std::size_t> pivots_;
};

template <class Int>
std::size_t rank_with(const IntMatrix& vectors, std::size_t width, std::size_t cap)
{
    Echelon<Int> echelon(width);
    for (const auto& v : vectors) {
        echelon.insert(std::vector<Int>(v.begin(), v.end()));
        if (echelon.rank() == cap)
            break;
    }
    return echelon.rank();
}

/// Exact rank, stopping early once it reaches cap (callers pass a proven
/// upper bound, so the result stays exact).
std::size_t capped_rank(const IntMatrix& vectors, std::size_t cap)
{
    if (vectors.empty())
        return 0;
    const std::size_t width = vectors.front().size();
    for (const auto& v : vectors)
        if (v.size() != width)
            fail(ErrorCode::InvalidArgument, "vectors differ in dimension");
    cap = std::min(cap, width);
    if (cap == 0)
        return 0;
    try {
        return rank_with<std::int64_t>(vectors, width, cap);
    } catch (const Overflow&) {
        return rank_with<BigInt>(vectors, width, cap);
    }
}

IntMatrix differences(const IntMatrix& vectors)
{
    IntMatrix diffs;
    if (vectors.empty())
        return diffs;
    diffs.reserve(vectors.size() - 1);
    const auto& base = vectors.front();
    for (std::size_t i = 1; i < vectors.size(); ++i) {
        if (vectors[i].size() != base.size())
            fail(ErrorCode::InvalidArgument, "vectors differ in dimension");
        std::vector<Coeff> d(base.size());
        for (std::size_t c = 0; c < base.size(); ++c)
            d[c] = vectors[i][c] - base[c];
        diffs.push_back(std::move(d));
    }
    return diffs;
}

int worker_count(const EngineOptions& options, std::uint64_t work)
{
    int threads = options.threads;
    if (threads <= 0)
        threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    const std::uint64_t cap = std::max<std::uint64_t>(1, work / 4096);
    return static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), cap));
}

struct ScanResult {
    bool valid = true;
    std::uint64_t min_violator = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> roots;
};

/// Visits canonical cuts in Gray-code order over [lo, hi) of the Gray index,
/// updating a^T δ(S) incrementally as one node flips per step.
void scan_range(const std::vector<Coeff>& weights, int n, Coeff rhs, std::uint64_t lo, std::uint64_t hi,
                bool collect_roots, ScanResult& out)
{
    const auto w = [&](int x, int y) { return weights[static_cast<std::size_t>(x * n + y)]; };
    std::uint64_t mask = lo ^ (lo >> 1);
    Coeff value = 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (((mask >> x) & 1U) != ((mask >> y) & 1U))
                value += w(x, y);

    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        if (value > rhs) {
            out.valid = false;
            out.min_violator = std::min(out.min_violator, mask);
        } else if (value == rhs && collect_roots) {
            out.roots.push_back(mask);
        }
        if (idx + 1 == hi)
            break;
        const int x = std::countr_zero(idx + 1);
        const unsigned side = (mask >> x) & 1U;
        Coeff delta = 0;
        for (int y = 0; y < n; ++y) {
            if (y == x)
                continue;
            delta += (((mask >> y) & 1U) == side) ? w(x, y) : -w(x, y);
        }
        mask ^= std::uint64_t{1} << x;
        value += delta;
    }
}

ScanResult scan(const LinearInequality& ineq, bool collect_roots, const EngineOptions& options)
{
    const int n = ineq.node_count();
    const CutRange all = enumerate_cuts(n, options);

    std::vector<Coeff> weights(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    const auto edges = ineq.graph().edges();
    const auto coeffs = ineq.edge_coeffs();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto u = static_cast<std::size_t>(edges[i].u - 1);
        const auto v = static_cast<std::size_t>(edges[i].v - 1);
        weights[u * static_cast<std::size_t>(n) + v] = coeffs[i];
        weights[v * static_cast<std::size_t>(n) + u] = coeffs[i];
    }

    const auto parts = all.split(worker_count(options, all.size()));
    std::vector<ScanResult> partial(parts.size());
    if (parts.size() == 1) {
        scan_range(weights, n, ineq.rhs(), parts[0].first(), parts[0].last(), collect_roots, partial[0]);
    } else {
        std::vector<std::jthread> workers;
        for (std::size_t i = 0; i < parts.size(); ++i)
            workers.emplace_back([&, i] {
                scan_range(weights, n, ineq.rhs(), parts[i].first(), parts[i].last(), collect_roots, partial[i]);
            });
    }

    ScanResult merged;
    for (auto& p : partial) {
        merged.valid = merged.valid && p.valid;
        merged.min_violator = std::min(merged.min_violator, p.min_violator);
        merged.roots.insert(merged.roots.end(), p.roots.begin(), p.roots.end());
    }
    std::sort(merged.roots.begin(), merged.roots.end());
    return merged;
}

LinearInequality as_cut_form(const LinearInequality& ineq, Coeff* scale = nullptr)
{
    if (ineq.form() == Form::Cut) {
        if (scale)
            *scale = 1;
        return ineq;
    }
    auto mapped = covariance_map(ineq);
    if (scale)
        *scale = mapped.scale;
    return std::move(mapped.ineq);
}

RootSet make_root_set(int n, const std::vector<std::uint64_t>& masks)
{
    RootSet out;
    out.node_count = n;
    out.roots.reserve(masks.size());
    for (auto m : masks)
        out.roots.emplace_back(n, m);
    return out;
}

} // namespace

CutRange::CutRange(int node_count, std::uint64_t first, std::uint64_t last)
    : n_(node_count), first_(first), last_(last)
{
    if (first > last)
        fail(ErrorCode::InvalidArgument, "cut range bounds out of order");
}

std::vector<CutRange> CutRange::split(int parts) const
{
    parts = std::max(1, parts);
    std::vector<CutRange> out;
    const std::uint64_t total = size();
    const auto p = static_cast<std::uint64_t>(parts);
    std::uint64_t begin = first_;
    for (std::uint64_t i = 0; i < p; ++i) {
        const std::uint64_t end = first_ + total * (i + 1) / p;
        if (end > begin || (total == 0 && i == 0))
            out.emplace_back(n_, begin, end);
        begin = end;
    }
    return out;
}

CutRange enumerate_cuts(int node_count, const EngineOptions& options)
{
    if (node_count < 1)
        fail(ErrorCode::InvalidArgument, "need at least one node");
    if (node_count > options.max_nodes || node_count > 62)
        fail(ErrorCode::TooLarge, std::to_string(node_count) + " nodes exceeds the enumeration cap of "
                                      + std::to_string(std::min(options.max_nodes, 62)));
    return CutRange(node_count, 0, std::uint64_t{1} << (node_count - 1));
}

bool RootSet::contains(const CutSet& s) const
{
    return std::binary_search(roots.begin(), roots.end(), s.canonical());
}

ValidityResult is_valid(const LinearInequality& ineq, const EngineOptions& options)
{
    const auto cut = as_cut_form(ineq);
    const auto result = scan(cut, false, options);
    ValidityResult out;
    out.valid = result.valid;
    if (!result.valid)
        out.violating_cut = CutSet(cut.node_count(), result.min_violator);
    return out;
}

RootSet roots(const LinearInequality& ineq, const EngineOptions& options)
{
    const auto cut = as_cut_form(ineq);
    const auto result = scan(cut, true, options);
    if (!result.valid)
        fail(ErrorCode::NotValid, "root enumeration refused: inequality is violated by cut mask "
                                      + std::to_string(result.min_violator));
    return make_root_set(cut.node_count(), result.roots);
}

std::size_t linear_rank(const IntMatrix& vectors)
{
    return capped_rank(vectors, std::numeric_limits<std::size_t>::max());
}

std::size_t affine_rank(const IntMatrix& vectors)
{
    if (vectors.empty())
        return 0;
    return linear_rank(differences(vectors)) + 1;
}

FacetReport facet_report(const LinearInequality& ineq, const EngineOptions& options)
{
    FacetReport report;
    const auto cut = as_cut_form(ineq, &report.scale);
    report.ambient_dim = cut.ambient_dim();

    const auto result = scan(cut, true, options);
    report.valid = result.valid;
    if (!result.valid) {
        report.violating_cut = CutSet(cut.node_count(), result.min_violator);
        return report;
    }
    report.root_count = result.roots.size();

    IntMatrix vectors;
    vectors.reserve(result.roots.size());
    for (auto m : result.roots) {
        const auto v = cut_vector(cut.graph(), CutSet(cut.node_count(), m));
        vectors.emplace_back(v.begin(), v.end());
    }
    // Roots of a nonzero inequality lie in its hyperplane: at most dim affinely
    // independent ones.
    const bool nonzero = std::any_of(cut.edge_coeffs().begin(), cut.edge_coeffs().end(),
                                     [](Coeff c) { return c != 0; });
    const std::size_t cap = nonzero && report.ambient_dim > 0 ? report.ambient_dim - 1
                                                              : std::numeric_limits<std::size_t>::max();
    report.affine_rank = vectors.empty() ? 0 : capped_rank(differences(vectors), cap) + 1;
    report.is_facet = report.affine_rank == report.ambient_dim;
    return report;
}

bool face_contained_in(const LinearInequality& a, const LinearInequality& b, const EngineOptions& options)
{
    if (a.form() != b.form() || !(a.graph() == b.graph()))
        fail(ErrorCode::AmbientMismatch, "inequalities live on different ambient spaces");
    const auto ra = roots(a, options);
    const auto rb = roots(b, options);
    return std::includes(rb.roots.begin(), rb.roots.end(), ra.roots.begin(), ra.roots.end());
}

} // namespace cutfacet
