#pragma once

#include <string>
#include <vector>

#include "gapprob/exact.hpp"

namespace gapprob {

/// Pool size n and draw size m of a lottery-style draw, 0 <= m <= n.
struct DrawSpec {
    int n = 1;
    int m = 0;

    /// Validating constructor helper; throws InvalidDrawSpecError.
    static DrawSpec checked(int n, int m);

    friend bool operator==(const DrawSpec&, const DrawSpec&) = default;
};

enum class Topology { Line, Cycle };

std::string to_string(Topology topo);

/// A draw outcome: strictly increasing values in 1..n.
class Subset {
public:
    Subset() = default;

    /// Validates ordering and range; throws InvalidSubsetError.
    static Subset checked(std::vector<int> values, int n);

    /// Adopts values that are known to satisfy the invariant already
    /// (enumeration and sampling produce them by construction).
    static Subset unchecked(std::vector<int> values);

    const std::vector<int>& values() const { return values_; }
    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }

    friend bool operator==(const Subset&, const Subset&) = default;
    friend auto operator<=>(const Subset&, const Subset&) = default;

private:
    std::vector<int> values_;
};

/// Number of m-subsets of 1..n whose minimum gap between consecutive chosen
/// values is at least k: C(n - (k-1)(m-1), m). The total binom() makes the
/// formula cover m = 0 (one subset) and m = 1 (n subsets) as well.
BigInt count_line(const DrawSpec& spec, int k);

/// Number of m-subsets of a ring of n positions with every circular gap at
/// least k, by the reduction to two line counts:
///   g_k(n, m) = (k-1) * f_k(n-2k+1, m-1) + f_k(n-k+1, m).
/// Edge conventions: m = 0 -> 1, m = 1 -> n, k = 1 -> C(n, m).
BigInt count_cycle(const DrawSpec& spec, int k);

/// Binomial-sum variant of the ring count that appears in print for this
/// problem: f_k(n-k+1, m) + f_k(n-2k+1, m-1), i.e. the reduction above
/// without the (k-1) multiplicity factor. Exhaustive enumeration confirms
/// the recurrence, not this variant, for k >= 3 (and the variant even
/// exceeds C(n, m) at k = 1). Kept only to reproduce published tables
/// behind an explicit compatibility flag; never used as a default path.
BigInt count_cycle_compat(const DrawSpec& spec, int k);

/// Exact probability that the published variant implies, as a signed
/// rational (it drops below zero at k = 1).
Rational cycle_probability_compat(const DrawSpec& spec, int k);

struct GapProbability {
    ExactProb p;       ///< probability some two drawn numbers are at distance < k
    ExactProb q;       ///< complement: all gaps >= k
    bool degenerate;   ///< m < 2: no pair exists, p defined as exactly 0
};

/// P[min gap < k] for a uniform draw, exact. k = 1 is exactly 0 on either
/// topology; m < 2 is flagged degenerate with p = 0.
GapProbability gap_probability(const DrawSpec& spec, int k, Topology topo);

/// Gap-eliminating renumbering: subtracts (i-1)(k-1) from the i-th smallest
/// chosen value, mapping subsets of 1..n with min gap >= k onto plain
/// m-subsets of 1..n-(k-1)(m-1). Throws GapTooSmallError if the input
/// violates the min-gap precondition.
Subset compress(const Subset& subset, int k);

/// Inverse of compress: adds (i-1)(k-1) back, producing a subset of
/// 1..target_n with min gap >= k. Throws OutOfRangeError when an input value
/// exceeds target_n - (k-1)(m-1).
Subset expand(const Subset& subset, int k, int target_n);

}  // namespace gapprob
