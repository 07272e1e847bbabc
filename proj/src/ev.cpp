#include "gapprob/ev.hpp"

#include "gapprob/errors.hpp"

namespace gapprob {

std::string to_string(AdvantagedParty party) {
    switch (party) {
        case AdvantagedParty::House: return "house";
        case AdvantagedParty::Player: return "player";
        case AdvantagedParty::Fair: return "fair";
    }
    return "fair";
}

EvReport game_ev(const DrawSpec& spec, int k, Topology topo) {
    if (spec.m < 2) throw DegenerateDrawError(spec.m);
    GapProbability gp = gap_probability(spec, k, topo);

    EvReport report;
    report.spec = spec;
    report.k = k;
    report.topo = topo;
    report.win_prob = gp.p;
    report.ev_per_unit_stake = Rational(2) * gp.p.value() - Rational(1);
    report.house_edge = -report.ev_per_unit_stake;
    int sign = report.ev_per_unit_stake.signum();
    report.advantaged = sign > 0   ? AdvantagedParty::Player
                        : sign < 0 ? AdvantagedParty::House
                                   : AdvantagedParty::Fair;
    return report;
}

}  // namespace gapprob
