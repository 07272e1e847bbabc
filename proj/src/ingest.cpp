#include "gapprob/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>

#include "gapprob/errors.hpp"
#include "gapprob/montecarlo.hpp"
#include "gapprob/oracle.hpp"

namespace gapprob {

namespace {

std::string_view trimmed(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    return text;
}

int parse_number(std::string_view field, int line_no) {
    field = trimmed(field);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw MalformedLineError(line_no, "'" + std::string(field) + "' is not an integer");
    return value;
}

}  // namespace

std::vector<DrawRecord> parse_draws(std::istream& input, const DrawSpec& spec) {
    std::vector<DrawRecord> records;
    std::string line;
    int line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        std::string_view view = trimmed(line);
        if (view.empty() || view.front() == '#') continue;

        auto comma = view.find(',');
        if (comma == std::string_view::npos)
            throw MalformedLineError(line_no, "expected 'label,v1,...,vm'");
        std::string label(view.substr(0, comma));
        view.remove_prefix(comma + 1);

        std::vector<int> numbers;
        numbers.reserve(static_cast<std::size_t>(spec.m));
        while (true) {
            auto next = view.find(',');
            std::string_view field =
                next == std::string_view::npos ? view : view.substr(0, next);
            numbers.push_back(parse_number(field, line_no));
            if (next == std::string_view::npos) break;
            view.remove_prefix(next + 1);
        }

        if (static_cast<int>(numbers.size()) != spec.m)
            throw WrongCountError(line_no, "expected " + std::to_string(spec.m) +
                                               " numbers, got " +
                                               std::to_string(numbers.size()));
        // Published lists come in draw order as often as ascending; sort first,
        // then reject duplicates and out-of-range values.
        std::sort(numbers.begin(), numbers.end());
        for (std::size_t i = 0; i < numbers.size(); ++i) {
            if (numbers[i] < 1 || numbers[i] > spec.n)
                throw OutOfRangeNumberError(line_no, "number " + std::to_string(numbers[i]) +
                                                         " outside 1.." +
                                                         std::to_string(spec.n));
            if (i > 0 && numbers[i] == numbers[i - 1])
                throw DuplicateNumberError(line_no,
                                           "number " + std::to_string(numbers[i]) + " repeats");
        }
        records.push_back(
            DrawRecord{std::move(label), Subset::unchecked(std::move(numbers)), line_no});
    }
    return records;
}

std::string serialize_draws(std::span<const DrawRecord> records) {
    std::string out;
    for (const DrawRecord& record : records) {
        out += record.label;
        for (int value : record.numbers.values()) {
            out += ',';
            out += std::to_string(value);
        }
        out += '\n';
    }
    return out;
}

AuditReport audit(std::span<const DrawRecord> records, const DrawSpec& spec,
                  Topology topo, int k_max) {
    if (records.empty()) throw EmptyHistoryError();
    if (k_max < 1) throw InvalidKError(k_max);

    // Tally exact min gaps once; every row is then a prefix sum.
    std::vector<std::uint64_t> gap_counts(static_cast<std::size_t>(spec.n) + 1, 0);
    for (const DrawRecord& record : records) {
        auto gap = min_gap(record.numbers, spec.n, topo);
        if (gap) ++gap_counts[static_cast<std::size_t>(*gap)];
    }

    AuditReport report;
    report.spec = spec;
    report.topo = topo;
    report.draws = records.size();

    std::uint64_t hits = 0;
    for (int k = 1; k <= k_max; ++k) {
        if (k - 1 >= 1 && k - 1 <= spec.n) hits += gap_counts[static_cast<std::size_t>(k - 1)];
        AuditRow row;
        row.k = k;
        row.hits = hits;
        row.empirical_freq = static_cast<double>(hits) / static_cast<double>(records.size());
        row.exact_p = gap_probability(spec, k, topo).p;
        row.deviation = std::abs(row.empirical_freq - row.exact_p.to_double());
        WilsonInterval ci = wilson95(hits, records.size());
        row.ci_low = ci.low;
        row.ci_high = ci.high;
        double exact = row.exact_p.to_double();
        row.exact_in_ci = ci.low <= exact && exact <= ci.high;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace gapprob
