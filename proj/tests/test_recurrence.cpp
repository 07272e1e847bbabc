#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gapprob/exact.hpp"
#include "gapprob/gapcount.hpp"
#include "gapprob/recurrence.hpp"

using namespace gapprob;

TEST_CASE("dp table seeds and small values") {
    CountTable table = dp_f(10, 5);
    CHECK(table.at(3, 2) == BigInt(1));
    CHECK(table.at(4, 2) == BigInt(3));  // {1,3},{1,4},{2,4}
    CHECK(table.at(5, 2) == BigInt(6));
    for (int n = 0; n <= 10; ++n) {
        CHECK(table.at(n, 0) == BigInt(1));
        CHECK(table.at(n, 1) == BigInt(n));
    }
}

TEST_CASE("dp vanishing region is exact") {
    CountTable table = dp_f(40, 22);
    for (int n = 0; n <= 40; ++n)
        for (int m = 0; m <= 22; ++m) {
            bool vanishes = m >= (n + 1) / 2 + 1;
            REQUIRE(table.at(n, m).is_zero() == vanishes);
        }
}

TEST_CASE("series coefficients match hand-derived values") {
    CountTable table = series_f(10, 5);
    CHECK(table.at(0, 0) == BigInt(1));
    CHECK(table.at(1, 1) == BigInt(1));
    CHECK(table.at(5, 2) == BigInt(6));
    CHECK(table.at(3, 2) == BigInt(1));
    for (int n = 0; n <= 10; ++n) {
        CHECK(table.at(n, 0) == BigInt(1));
        CHECK(table.at(n, 1) == BigInt(n));
    }
}

TEST_CASE("series coefficients vanish above the diagonal") {
    CountTable table = series_f(12, 12);
    for (int n = 0; n <= 12; ++n)
        for (int m = n + 1; m <= 12; ++m) REQUIRE(table.at(n, m).is_zero());
}

TEST_CASE("series reaches the headline coefficient") {
    CountTable table = series_f(49, 6);
    CHECK(table.at(49, 6) == BigInt(7059052));
    CHECK(table.at(49, 6) == binom(44, 6));
}

TEST_CASE("three-way agreement up to (60, 12)") {
    CrosscheckReport report = crosscheck(60, 12);
    CHECK(report.passed);
    CHECK(report.mismatches.empty());
    // The same tables also agree with the k = 2 line counter cell by cell.
    CountTable dp = dp_f(60, 12);
    for (int n = 1; n <= 60; ++n)
        for (int m = 0; m <= 12 && m <= n; ++m)
            REQUIRE(dp.at(n, m) == count_line(DrawSpec{n, m}, 2));
}

TEST_CASE("crosscheck carries its bounds in the report") {
    CrosscheckReport ok = crosscheck(5, 5);
    CHECK(ok.passed);
    CHECK(ok.max_n == 5);
    CHECK(ok.max_m == 5);
}
