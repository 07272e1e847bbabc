#pragma once

#include "gapprob/gapcount.hpp"

namespace gapprob {

enum class AdvantagedParty { House, Player, Fair };

std::string to_string(AdvantagedParty party);

/// Even-money bet that the draw contains two numbers at distance < k:
/// the player stakes one unit and receives one unit on a win.
struct EvReport {
    DrawSpec spec;
    int k = 2;
    Topology topo = Topology::Line;
    ExactProb win_prob;
    Rational ev_per_unit_stake;  ///< 2 * win_prob - 1, exact, may be negative
    Rational house_edge;         ///< -ev
    AdvantagedParty advantaged = AdvantagedParty::Fair;
};

/// Exact expected value of the bet per unit stake. Throws DegenerateDrawError
/// for m < 2 (no pair exists, so the bet's event is vacuous).
EvReport game_ev(const DrawSpec& spec, int k, Topology topo);

}  // namespace gapprob
