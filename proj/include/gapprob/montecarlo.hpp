#pragma once

#include <cstdint>

#include "gapprob/oracle.hpp"

namespace gapprob {

/// splitmix64: the standard 64-bit mixer, used here only to expand seeds
/// into generator state. Constants are Vigna's published ones.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// xoshiro256++ (Blackman & Vigna), the library's one simulation generator:
/// portable, seedable, and fast, with published reference constants so runs
/// replicate across platforms.
///
/// Seeding: worker w of a run with seed s takes the four state words from a
/// splitmix64 sequence started at s and advanced 4*w steps, so worker 0 is
/// the plain single-threaded generator and distinct workers get disjoint,
/// reproducible streams.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) : Xoshiro256pp(seed, 0) {}

    Xoshiro256pp(std::uint64_t seed, int worker) {
        SplitMix64 expander(seed);
        for (int skip = 0; skip < 4 * worker; ++skip) expander.next();
        for (auto& word : state_) word = expander.next();
    }

    std::uint64_t next() {
        std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Unbiased uniform draw from [0, bound), bound >= 1, by rejection below
    /// the largest multiple of bound.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

/// Uniform m-subset of 1..n via partial Fisher-Yates, returned sorted.
Subset sample_draw(const DrawSpec& spec, Xoshiro256pp& rng);

struct SimConfig {
    DrawSpec spec;
    int k = 2;
    Topology topo = Topology::Line;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    int workers = 1;  ///< trial split; the report is deterministic per (seed, workers)
};

struct SimReport {
    DrawSpec spec;
    int k = 2;
    Topology topo = Topology::Line;
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;    ///< trials whose min gap was < k
    double estimate = 0.0;     ///< hits / trials
    double ci_low = 0.0;       ///< 95% Wilson bounds, clamped to contain the estimate
    double ci_high = 1.0;
    std::uint64_t seed = 0;
    int workers = 1;
};

/// 95% Wilson score interval for hits successes in trials attempts, clamped
/// so that ci_low <= hits/trials <= ci_high despite floating-point rounding.
struct WilsonInterval {
    double low;
    double high;
};
WilsonInterval wilson95(std::uint64_t hits, std::uint64_t trials);

/// Runs config.trials independent draws and reports the empirical frequency
/// of min gap < k with its 95% Wilson interval. Deterministic for a fixed
/// (seed, workers) pair; trials are split evenly across workers with
/// left-over trials going to the lowest worker indices.
SimReport simulate(const SimConfig& config);

}  // namespace gapprob
