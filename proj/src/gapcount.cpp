#include "gapprob/gapcount.hpp"

#include <algorithm>

#include "gapprob/errors.hpp"

namespace gapprob {

namespace {

void require_valid_k(int k) {
    if (k < 1) throw InvalidKError(k);
}

/// f_k on raw integer arguments, zero-extended: the cycle reduction feeds it
/// shrunken pool sizes that can go non-positive, where the count is zero.
BigInt line_count_raw(long long n, long long m, int k) {
    return binom(n - static_cast<long long>(k - 1) * (m - 1), m);
}

}  // namespace

DrawSpec DrawSpec::checked(int n, int m) {
    if (n < 1)
        throw InvalidDrawSpecError("pool size n must be positive, got " + std::to_string(n));
    if (m < 0 || m > n)
        throw InvalidDrawSpecError("draw size m must satisfy 0 <= m <= n, got m = " +
                                   std::to_string(m) + ", n = " + std::to_string(n));
    return DrawSpec{n, m};
}

std::string to_string(Topology topo) {
    return topo == Topology::Line ? "line" : "cycle";
}

Subset Subset::checked(std::vector<int> values, int n) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 1 || values[i] > n)
            throw InvalidSubsetError("value " + std::to_string(values[i]) +
                                     " outside 1.." + std::to_string(n));
        if (i > 0 && values[i] <= values[i - 1])
            throw InvalidSubsetError("values must be strictly increasing");
    }
    Subset s;
    s.values_ = std::move(values);
    return s;
}

Subset Subset::unchecked(std::vector<int> values) {
    Subset s;
    s.values_ = std::move(values);
    return s;
}

BigInt count_line(const DrawSpec& spec, int k) {
    require_valid_k(k);
    return line_count_raw(spec.n, spec.m, k);
}

BigInt count_cycle(const DrawSpec& spec, int k) {
    require_valid_k(k);
    if (k == 1) return binom(spec.n, spec.m);
    if (spec.m == 0) return BigInt(1);
    if (spec.m == 1) return BigInt(spec.n);
    // Split on whether a chosen value lands in a fixed k-1 window: removing
    // the window and its forbidden neighbourhood opens the ring into a line.
    BigInt anchored = line_count_raw(spec.n - 2 * k + 1, spec.m - 1, k);
    anchored.mul_small(static_cast<std::uint32_t>(k - 1));
    return anchored + line_count_raw(spec.n - k + 1, spec.m, k);
}

BigInt count_cycle_compat(const DrawSpec& spec, int k) {
    require_valid_k(k);
    return line_count_raw(spec.n - k + 1, spec.m, k) +
           line_count_raw(spec.n - 2 * k + 1, spec.m - 1, k);
}

Rational cycle_probability_compat(const DrawSpec& spec, int k) {
    BigInt total = binom(spec.n, spec.m);
    return Rational(total - count_cycle_compat(spec, k), total);
}

GapProbability gap_probability(const DrawSpec& spec, int k, Topology topo) {
    require_valid_k(k);
    if (spec.m < 2) {
        // No pair exists; "two numbers are close" is vacuously false.
        return GapProbability{ExactProb(), ExactProb().complement(), true};
    }
    BigInt total = binom(spec.n, spec.m);
    BigInt open = topo == Topology::Line ? count_line(spec, k) : count_cycle(spec, k);
    ExactProb q = prob_ratio(open, total);
    return GapProbability{q.complement(), q, false};
}

Subset compress(const Subset& subset, int k) {
    require_valid_k(k);
    const auto& values = subset.values();
    std::vector<int> mapped(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0 && values[i] - values[i - 1] < k)
            throw GapTooSmallError("gap " + std::to_string(values[i] - values[i - 1]) +
                                   " between " + std::to_string(values[i - 1]) + " and " +
                                   std::to_string(values[i]) + " is below k = " +
                                   std::to_string(k));
        mapped[i] = values[i] - static_cast<int>(i) * (k - 1);
    }
    return Subset::unchecked(std::move(mapped));
}

Subset expand(const Subset& subset, int k, int target_n) {
    require_valid_k(k);
    const auto& values = subset.values();
    int m = subset.size();
    int limit = target_n - (k - 1) * (m - 1);
    std::vector<int> mapped(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] > limit)
            throw OutOfRangeError("value " + std::to_string(values[i]) + " exceeds " +
                                  std::to_string(limit) + " = target_n - (k-1)(m-1)");
        mapped[i] = values[i] + static_cast<int>(i) * (k - 1);
    }
    return Subset::unchecked(std::move(mapped));
}

}  // namespace gapprob
