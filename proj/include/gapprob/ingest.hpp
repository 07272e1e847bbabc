#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gapprob/gapcount.hpp"

namespace gapprob {

/// One historical draw: an opaque label (usually a date) plus the winning
/// numbers, validated against a DrawSpec at parse time.
struct DrawRecord {
    std::string label;
    Subset numbers;
    int source_line = 0;  ///< 1-based line in the input it came from

    friend bool operator==(const DrawRecord&, const DrawRecord&) = default;
};

/// Parses draw history in CSV form, one draw per line:
///   label,v1,v2,...,vm
/// The label contains no comma; values are base-10 integers in any order
/// (they are sorted before validation). Blank lines and lines starting with
/// '#' are ignored but still counted for error reporting. Throws
/// WrongCountError / MalformedLineError / OutOfRangeNumberError /
/// DuplicateNumberError with the offending line number.
std::vector<DrawRecord> parse_draws(std::istream& input, const DrawSpec& spec);

/// Canonical CSV rendering (numbers ascending, '\n' line ends);
/// parse_draws(serialize_draws(r)) reproduces r up to source line numbers.
std::string serialize_draws(std::span<const DrawRecord> records);

struct AuditRow {
    int k = 0;
    std::uint64_t hits = 0;    ///< draws whose min gap is < k
    double empirical_freq = 0.0;
    ExactProb exact_p;
    double deviation = 0.0;    ///< |empirical_freq - exact_p|
    double ci_low = 0.0;       ///< 95% Wilson interval for the empirical frequency
    double ci_high = 1.0;
    bool exact_in_ci = true;
};

struct AuditReport {
    DrawSpec spec;
    Topology topo = Topology::Line;
    std::uint64_t draws = 0;
    std::vector<AuditRow> rows;  ///< k = 1..k_max
};

/// Compares empirical min-gap frequencies of a draw history against the
/// exact probabilities, one row per k. Throws EmptyHistoryError on an empty
/// record list.
AuditReport audit(std::span<const DrawRecord> records, const DrawSpec& spec,
                  Topology topo, int k_max);

}  // namespace gapprob
