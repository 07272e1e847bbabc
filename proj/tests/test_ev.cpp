#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gapprob/errors.hpp"
#include "gapprob/ev.hpp"

using namespace gapprob;

TEST_CASE("line game favours the house by the exact published margin") {
    EvReport report = game_ev(DrawSpec{49, 6}, 2, Topology::Line);
    CHECK(report.ev_per_unit_stake == Rational(BigInt(-134288), BigInt(13983816)));
    CHECK(report.ev_per_unit_stake == Rational(BigInt(-218), BigInt(22701)));
    CHECK(report.ev_per_unit_stake.to_decimal_string(6) == "-0.009603");
    CHECK(report.house_edge.to_decimal_string(6) == "0.009603");
    CHECK(report.advantaged == AdvantagedParty::House);
    CHECK(report.ev_per_unit_stake.signum() < 0);
}

TEST_CASE("ring game flips the edge to the player") {
    EvReport report = game_ev(DrawSpec{49, 6}, 2, Topology::Cycle);
    CHECK(report.win_prob.value() == Rational(BigInt(7036694), BigInt(13983816)));
    CHECK(report.ev_per_unit_stake == Rational(BigInt(89572), BigInt(13983816)));
    CHECK(report.ev_per_unit_stake.signum() > 0);
    CHECK(report.advantaged == AdvantagedParty::Player);
    CHECK(report.ev_per_unit_stake.to_decimal_string(6) == "0.006405");
}

TEST_CASE("even-probability bets are fair") {
    // k large enough that the win probability is exactly 1 gives ev = 1;
    // a fair case needs p = 1/2 exactly: n=4, m=2, k=2 on the line has
    // p = 1 - C(3,2)/C(4,2) = 1/2.
    EvReport report = game_ev(DrawSpec{4, 2}, 2, Topology::Line);
    CHECK(report.win_prob.value() == Rational(BigInt(1), BigInt(2)));
    CHECK(report.ev_per_unit_stake.is_zero());
    CHECK(report.advantaged == AdvantagedParty::Fair);
}

TEST_CASE("ev is antisymmetric in p vs 1-p") {
    for (int k = 1; k <= 6; ++k) {
        EvReport report = game_ev(DrawSpec{20, 4}, k, Topology::Line);
        Rational p = report.win_prob.value();
        Rational mirrored = Rational(2) * (Rational(1) - p) - Rational(1);
        CHECK(mirrored == -report.ev_per_unit_stake);
        CHECK(report.house_edge == -report.ev_per_unit_stake);
    }
}

TEST_CASE("degenerate draws cannot be bet on") {
    CHECK_THROWS_AS(game_ev(DrawSpec{49, 1}, 2, Topology::Line), DegenerateDrawError);
    CHECK_THROWS_AS(game_ev(DrawSpec{49, 0}, 2, Topology::Cycle), DegenerateDrawError);
}

TEST_CASE("certain win pays out fully") {
    EvReport report = game_ev(DrawSpec{49, 6}, 10, Topology::Line);
    CHECK(report.win_prob.value() == Rational(1));
    CHECK(report.ev_per_unit_stake == Rational(1));
    CHECK(report.advantaged == AdvantagedParty::Player);
}
