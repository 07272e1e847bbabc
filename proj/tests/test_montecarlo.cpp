#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "gapprob/gapcount.hpp"
#include "gapprob/montecarlo.hpp"

using namespace gapprob;

TEST_CASE("sample_draw returns the full pool when m equals n") {
    for (std::uint64_t seed : {0ull, 1ull, 99999ull}) {
        Xoshiro256pp rng(seed);
        Subset s = sample_draw(DrawSpec{6, 6}, rng);
        CHECK(s == Subset::checked({1, 2, 3, 4, 5, 6}, 6));
    }
}

TEST_CASE("sample_draw always produces a valid sorted subset") {
    Xoshiro256pp rng(2024);
    for (int i = 0; i < 2000; ++i) {
        Subset s = sample_draw(DrawSpec{49, 6}, rng);
        CHECK_NOTHROW(Subset::checked(s.values(), 49));
        CHECK(s.size() == 6);
    }
}

TEST_CASE("sample_draw is uniform over the six pairs of a 4-pool") {
    Xoshiro256pp rng(7);
    std::map<std::vector<int>, int> freq;
    const int draws = 60000;
    for (int i = 0; i < draws; ++i) freq[sample_draw(DrawSpec{4, 2}, rng).values()]++;
    CHECK(freq.size() == 6);
    for (const auto& [pair, count] : freq) {
        double rel = static_cast<double>(count) / draws;
        CHECK(std::abs(rel - 1.0 / 6.0) < 0.01);
    }
}

TEST_CASE("wilson interval matches precomputed references") {
    WilsonInterval a = wilson95(4952, 10000);
    CHECK(a.low == doctest::Approx(0.4854043563335993).epsilon(1e-12));
    CHECK(a.high == doctest::Approx(0.5049993300507591).epsilon(1e-12));
    WilsonInterval zero = wilson95(0, 100);
    CHECK(zero.low == 0.0);  // clamped to the estimate
    CHECK(zero.high == doctest::Approx(0.03699349820698568).epsilon(1e-12));
    WilsonInterval one = wilson95(100, 100);
    CHECK(one.high == 1.0);
    CHECK(one.low == doctest::Approx(0.9630065017930143).epsilon(1e-12));
}

TEST_CASE("wilson interval brackets the estimate") {
    for (std::uint64_t trials : {1ull, 10ull, 1000ull})
        for (std::uint64_t hits = 0; hits <= trials; hits += std::max<std::uint64_t>(1, trials / 7)) {
            WilsonInterval ci = wilson95(hits, trials);
            double est = static_cast<double>(hits) / static_cast<double>(trials);
            CHECK(0.0 <= ci.low);
            CHECK(ci.low <= est);
            CHECK(est <= ci.high);
            CHECK(ci.high <= 1.0);
        }
}

TEST_CASE("simulate is deterministic for a fixed seed and worker count") {
    SimConfig config{DrawSpec{49, 6}, 2, Topology::Line, 20000, 424242, 1};
    SimReport a = simulate(config);
    SimReport b = simulate(config);
    CHECK(a.hits == b.hits);
    CHECK(a.estimate == b.estimate);
    CHECK(a.ci_low == b.ci_low);
    CHECK(a.ci_high == b.ci_high);
    CHECK(a.seed == 424242);
    CHECK(a.workers == 1);

    config.workers = 3;
    SimReport c = simulate(config);
    SimReport d = simulate(config);
    CHECK(c.hits == d.hits);
    CHECK(c.workers == 3);
}

TEST_CASE("k=1 never hits") {
    SimConfig config{DrawSpec{49, 6}, 1, Topology::Line, 5000, 11, 1};
    SimReport report = simulate(config);
    CHECK(report.hits == 0);
    CHECK(report.estimate == 0.0);
    CHECK(report.ci_low == 0.0);
}

TEST_CASE("estimates stay within five sigma of the exact probabilities") {
    const std::uint64_t trials = 100000;
    struct Case {
        int k;
        Topology topo;
    };
    for (const Case& c : {Case{2, Topology::Line}, Case{2, Topology::Cycle},
                          Case{3, Topology::Line}}) {
        double exact =
            gap_probability(DrawSpec{49, 6}, c.k, c.topo).p.to_double();
        SimConfig config{DrawSpec{49, 6}, c.k, c.topo, trials, 90210, 1};
        SimReport report = simulate(config);
        double sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
        CHECK(std::abs(report.estimate - exact) < 5.0 * sigma);
    }
}

TEST_CASE("wilson coverage over 100 seeded runs") {
    // Soft statistical check (documented policy: a genuine regression moves
    // this far below the ~95 expected; rerun once before believing a flake).
    double exact = gap_probability(DrawSpec{49, 6}, 2, Topology::Line).p.to_double();
    int covered = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        SimConfig config{DrawSpec{49, 6}, 2, Topology::Line, 10000, seed, 1};
        SimReport report = simulate(config);
        if (report.ci_low <= exact && exact <= report.ci_high) ++covered;
    }
    CHECK(covered >= 90);
}

TEST_CASE("worker streams differ but combine deterministically") {
    SimConfig one{DrawSpec{49, 6}, 2, Topology::Line, 30000, 5150, 1};
    SimConfig four{DrawSpec{49, 6}, 2, Topology::Line, 30000, 5150, 4};
    SimReport a = simulate(one);
    SimReport b = simulate(four);
    // Different splits sample different draws; both must stay near truth.
    double exact = gap_probability(DrawSpec{49, 6}, 2, Topology::Line).p.to_double();
    CHECK(std::abs(a.estimate - exact) < 0.02);
    CHECK(std::abs(b.estimate - exact) < 0.02);
    CHECK(simulate(four).hits == b.hits);
}
