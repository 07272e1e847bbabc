#include "gapprob/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <thread>

#include "gapprob/errors.hpp"

namespace gapprob {

std::optional<int> min_gap(std::span<const int> values, int n, Topology topo) {
    if (values.size() < 2) return std::nullopt;
    int best = values[1] - values[0];
    for (std::size_t i = 2; i < values.size(); ++i)
        best = std::min(best, values[i] - values[i - 1]);
    if (topo == Topology::Cycle)
        best = std::min(best, n - (values.back() - values.front()));
    return best;
}

std::optional<int> min_gap(const Subset& subset, int n, Topology topo) {
    return min_gap(std::span<const int>(subset.values()), n, topo);
}

BigInt GapDistribution::tail(int k) const {
    BigInt sum = no_pair;
    for (const auto& [gap, count] : counts)
        if (gap >= k) sum += count;
    return sum;
}

bool next_subset(std::vector<int>& values, int n) {
    int m = static_cast<int>(values.size());
    for (int i = m - 1; i >= 0; --i) {
        if (values[static_cast<std::size_t>(i)] < n - (m - 1 - i)) {
            ++values[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < m; ++j)
                values[static_cast<std::size_t>(j)] =
                    values[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> unrank_subset(const DrawSpec& spec, std::uint64_t index) {
    // Combinatorial number system: at each position greedily skip the blocks
    // of subsets beginning with smaller values. Every block size consulted is
    // at most C(n, m), which the budget precondition keeps inside 64 bits.
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(spec.m));
    int prev = 0;
    std::uint64_t remaining = index;
    for (int j = 1; j <= spec.m; ++j) {
        for (int v = prev + 1; v <= spec.n; ++v) {
            std::uint64_t block = binom(spec.n - v, spec.m - j).to_uint64();
            if (remaining < block) {
                values.push_back(v);
                prev = v;
                break;
            }
            remaining -= block;
        }
    }
    assert(static_cast<int>(values.size()) == spec.m);
    return values;
}

namespace {

struct Tally {
    std::vector<std::uint64_t> by_gap;  // index = exact min gap, 0 unused
    std::uint64_t no_pair = 0;

    explicit Tally(int n) : by_gap(static_cast<std::size_t>(n) + 1, 0) {}

    void merge(const Tally& other) {
        for (std::size_t i = 0; i < by_gap.size(); ++i) by_gap[i] += other.by_gap[i];
        no_pair += other.no_pair;
    }
};

Tally tally_range(const DrawSpec& spec, Topology topo, std::uint64_t first,
                  std::uint64_t count) {
    Tally tally(spec.n);
    if (count == 0) return tally;
    std::vector<int> values = unrank_subset(spec, first);
    for (std::uint64_t i = 0; i < count; ++i) {
        auto gap = min_gap(std::span<const int>(values), spec.n, topo);
        if (gap)
            ++tally.by_gap[static_cast<std::size_t>(*gap)];
        else
            ++tally.no_pair;
        if (i + 1 < count) {
            bool advanced = next_subset(values, spec.n);
            assert(advanced);
            (void)advanced;
        }
    }
    return tally;
}

}  // namespace

GapDistribution enumerate_distribution(const DrawSpec& spec, Topology topo,
                                       const EnumerateOptions& options) {
    BigInt total = binom(spec.n, spec.m);
    if (!total.fits_uint64() || total.to_uint64() > options.budget)
        throw BudgetExceededError(total.to_string(), options.budget);
    std::uint64_t count = total.to_uint64();

    int threads = std::max(1, options.threads);
    std::uint64_t per_worker = count / static_cast<std::uint64_t>(threads);
    std::uint64_t extra = count % static_cast<std::uint64_t>(threads);

    std::vector<Tally> tallies;
    tallies.reserve(static_cast<std::size_t>(threads));
    if (threads == 1 || count < 2) {
        tallies.push_back(tally_range(spec, topo, 0, count));
    } else {
        tallies.assign(static_cast<std::size_t>(threads), Tally(spec.n));
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(threads));
        std::uint64_t start = 0;
        for (int w = 0; w < threads; ++w) {
            std::uint64_t len = per_worker + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
            workers.emplace_back([&, w, start, len] {
                tallies[static_cast<std::size_t>(w)] = tally_range(spec, topo, start, len);
            });
            start += len;
        }
        for (auto& worker : workers) worker.join();
    }

    Tally combined(spec.n);
    for (const auto& tally : tallies) combined.merge(tally);

    GapDistribution dist;
    dist.spec = spec;
    dist.topo = topo;
    dist.total = total;
    dist.no_pair = BigInt::from_uint64(combined.no_pair);
    for (std::size_t gap = 1; gap < combined.by_gap.size(); ++gap)
        if (combined.by_gap[gap] != 0)
            dist.counts.emplace(static_cast<int>(gap),
                                BigInt::from_uint64(combined.by_gap[gap]));
    return dist;
}

}  // namespace gapprob
