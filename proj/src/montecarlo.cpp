#include "gapprob/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>
#include <vector>

#include "gapprob/errors.hpp"

namespace gapprob {

namespace {

constexpr double kZ95 = 1.959963984540054;

void sample_into(const DrawSpec& spec, Xoshiro256pp& rng, std::vector<int>& pool,
                 std::vector<int>& out) {
    pool.resize(static_cast<std::size_t>(spec.n));
    std::iota(pool.begin(), pool.end(), 1);
    for (int i = 0; i < spec.m; ++i) {
        auto j = static_cast<std::size_t>(i) +
                 static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(spec.n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    out.assign(pool.begin(), pool.begin() + spec.m);
    std::sort(out.begin(), out.end());
}

std::uint64_t run_worker(const SimConfig& config, int worker, std::uint64_t trials) {
    Xoshiro256pp rng(config.seed, worker);
    std::vector<int> pool;
    std::vector<int> draw;
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        sample_into(config.spec, rng, pool, draw);
        auto gap = min_gap(std::span<const int>(draw), config.spec.n, config.topo);
        if (gap && *gap < config.k) ++hits;
    }
    return hits;
}

}  // namespace

Subset sample_draw(const DrawSpec& spec, Xoshiro256pp& rng) {
    std::vector<int> pool;
    std::vector<int> out;
    sample_into(spec, rng, pool, out);
    return Subset::unchecked(std::move(out));
}

WilsonInterval wilson95(std::uint64_t hits, std::uint64_t trials) {
    if (trials == 0) return {0.0, 1.0};
    double n = static_cast<double>(trials);
    double p = static_cast<double>(hits) / n;
    double z2 = kZ95 * kZ95;
    double denom = 1.0 + z2 / n;
    double center = (p + z2 / (2.0 * n)) / denom;
    double half = kZ95 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    double low = std::max(0.0, center - half);
    double high = std::min(1.0, center + half);
    // Rounding can push a bound a few ulps past the point estimate.
    return {std::min(low, p), std::max(high, p)};
}

SimReport simulate(const SimConfig& config) {
    if (config.trials < 1) throw OutOfRangeError("trials must be >= 1");
    if (config.k < 1) throw InvalidKError(config.k);
    int workers = std::max(1, config.workers);

    std::uint64_t hits = 0;
    if (workers == 1) {
        hits = run_worker(config, 0, config.trials);
    } else {
        std::uint64_t per = config.trials / static_cast<std::uint64_t>(workers);
        std::uint64_t extra = config.trials % static_cast<std::uint64_t>(workers);
        std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            std::uint64_t quota = per + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
            threads.emplace_back([&, w, quota] {
                partial[static_cast<std::size_t>(w)] = run_worker(config, w, quota);
            });
        }
        for (auto& thread : threads) thread.join();
        for (std::uint64_t h : partial) hits += h;
    }

    SimReport report;
    report.spec = config.spec;
    report.k = config.k;
    report.topo = config.topo;
    report.trials = config.trials;
    report.hits = hits;
    report.estimate = static_cast<double>(hits) / static_cast<double>(config.trials);
    WilsonInterval ci = wilson95(hits, config.trials);
    report.ci_low = ci.low;
    report.ci_high = ci.high;
    report.seed = config.seed;
    report.workers = workers;
    return report;
}

}  // namespace gapprob
