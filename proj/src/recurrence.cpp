#include "gapprob/recurrence.hpp"

#include "gapprob/exact.hpp"

namespace gapprob {

namespace {

// ceil(n/2) + 1, the first m at which f(n, m) vanishes.
int vanishing_m(int n) {
    return (n + 1) / 2 + 1;
}

class DpTable : public CountTable {
public:
    DpTable(int max_n, int max_m) : CountTable(max_n, max_m) {
        for (int n = 0; n <= max_n; ++n) {
            for (int m = 0; m <= max_m; ++m) {
                if (m == 0) {
                    cell(n, m) = BigInt(1);
                } else if (m == 1) {
                    cell(n, m) = BigInt(n);
                } else if (m >= vanishing_m(n)) {
                    cell(n, m) = BigInt(0);  // more picks than non-adjacent slots
                } else if (n == 3 && m == 2) {
                    cell(n, m) = BigInt(1);  // the lone seed outside the rules above
                } else {
                    // n >= 4 here: every n <= 3 cell is covered by a seed.
                    cell(n, m) = get(n - 2, m) + get(n - 2, m - 1) + get(n - 2, m - 1) -
                                 get(n - 4, m - 2);
                }
            }
        }
    }

private:
    // Zero-extends below n = 0 for the f(n-4, m-2) term.
    BigInt get(int n, int m) const { return n < 0 ? BigInt(0) : at(n, m); }
};

class SeriesTable : public CountTable {
public:
    SeriesTable(int max_n, int max_m) : CountTable(max_n, max_m) {
        for (int n = 0; n <= max_n; ++n) {
            for (int m = 0; m <= max_m; ++m) {
                BigInt value = get(n - 1, m) + get(n - 2, m - 1);
                if (n == 0 && m == 0) value += BigInt(1);
                if (n == 1 && m == 1) value += BigInt(1);
                cell(n, m) = value;
            }
        }
    }

private:
    BigInt get(int n, int m) const { return n < 0 || m < 0 ? BigInt(0) : at(n, m); }
};

}  // namespace

CountTable dp_f(int max_n, int max_m) {
    return DpTable(max_n, max_m);
}

CountTable series_f(int max_n, int max_m) {
    return SeriesTable(max_n, max_m);
}

CrosscheckReport crosscheck(int max_n, int max_m, int max_mismatches) {
    CountTable dp = dp_f(max_n, max_m);
    CountTable series = series_f(max_n, max_m);
    CrosscheckReport report{true, max_n, max_m, {}};
    for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= max_m; ++m) {
            BigInt closed = binom(n - m + 1, m);
            if (dp.at(n, m) != closed || series.at(n, m) != closed) {
                report.passed = false;
                if (static_cast<int>(report.mismatches.size()) < max_mismatches)
                    report.mismatches.push_back(
                        {n, m, dp.at(n, m), series.at(n, m), closed});
            }
        }
    }
    return report;
}

}  // namespace gapprob
