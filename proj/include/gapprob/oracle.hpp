#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gapprob/gapcount.hpp"

namespace gapprob {

/// Minimum gap of a sorted draw: smallest difference between neighbouring
/// chosen values, plus the wraparound arc n - (max - min) on the cycle.
/// Returns nullopt (no pair) for fewer than two values.
std::optional<int> min_gap(const Subset& subset, int n, Topology topo);

/// Same, on a raw sorted span; the enumeration hot path uses this form.
std::optional<int> min_gap(std::span<const int> values, int n, Topology topo);

/// Exact tally of every m-subset of 1..n classified by its minimum gap.
struct GapDistribution {
    DrawSpec spec;
    Topology topo = Topology::Line;
    std::map<int, BigInt> counts;  ///< subsets whose min gap is exactly k
    BigInt no_pair;                ///< subsets with m < 2 (no gap defined)
    BigInt total;                  ///< C(n, m)

    /// Tail sum: number of subsets whose min gap is >= k. Subsets without a
    /// pair count toward every tail (the constraint is vacuously met).
    BigInt tail(int k) const;

    friend bool operator==(const GapDistribution&, const GapDistribution&) = default;
};

struct EnumerateOptions {
    /// Enumeration is refused when C(n, m) exceeds this many subsets.
    std::uint64_t budget = 20'000'000;
    /// Number of worker threads; the lexicographic range is split evenly and
    /// per-range tallies are summed, so the result is identical for any count.
    int threads = 1;
};

/// Visits every m-subset of 1..n exactly once in lexicographic order and
/// tallies exact min-gap counts. Throws BudgetExceededError (carrying the
/// refused subset count) when C(n, m) is over budget.
GapDistribution enumerate_distribution(const DrawSpec& spec, Topology topo,
                                       const EnumerateOptions& options = {});

/// Advances a sorted m-subset of 1..n to its lexicographic successor.
/// Returns false (leaving the values unspecified) after the last subset.
bool next_subset(std::vector<int>& values, int n);

/// The index-th m-subset of 1..n in lexicographic order, index in
/// [0, C(n,m)). Used to split enumeration into independent ranges.
std::vector<int> unrank_subset(const DrawSpec& spec, std::uint64_t index);

}  // namespace gapprob
