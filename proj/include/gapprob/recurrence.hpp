#pragma once

#include <vector>

#include "gapprob/bigint.hpp"

namespace gapprob {

/// Dense (n, m)-indexed table of exact counts, 0 <= n <= max_n,
/// 0 <= m <= max_m. Immutable once built.
class CountTable {
public:
    CountTable(int max_n, int max_m)
        : max_n_(max_n),
          max_m_(max_m),
          values_(static_cast<std::size_t>(max_n + 1) * static_cast<std::size_t>(max_m + 1)) {}

    int max_n() const { return max_n_; }
    int max_m() const { return max_m_; }

    const BigInt& at(int n, int m) const { return values_[index(n, m)]; }

protected:
    BigInt& cell(int n, int m) { return values_[index(n, m)]; }

private:
    std::size_t index(int n, int m) const {
        return static_cast<std::size_t>(n) * static_cast<std::size_t>(max_m_ + 1) +
               static_cast<std::size_t>(m);
    }

    int max_n_;
    int max_m_;
    std::vector<BigInt> values_;
};

/// Counts of m-subsets of 1..n with no two consecutive values, filled purely
/// by the two-index recurrence
///   f(n, m) = f(n-2, m) + 2 f(n-2, m-1) - f(n-4, m-2)
/// over seeds f(n, 0) = 1, f(n, 1) = n, f(3, 2) = 1, f(n, m) = 0 for
/// m >= ceil(n/2) + 1, and f(n, m) = 0 for n < 0. The closed form is never
/// consulted; agreement with it is what the cross-check command verifies.
CountTable dp_f(int max_n, int max_m);

/// Coefficients c(n, m) of z^n w^m in the bivariate series of
/// (1 + z w) / (1 - z - w z^2), obtained by clearing the denominator:
///   c(n, m) = c(n-1, m) + c(n-2, m-1) + [n=0, m=0] + [n=1, m=1],
/// with c = 0 at negative indices. Independent of dp_f and of the closed
/// form by construction.
CountTable series_f(int max_n, int max_m);

/// First cell where the two recurrence paths and the closed form
/// C(n-m+1, m) disagree, if any.
struct CrosscheckMismatch {
    int n;
    int m;
    BigInt dp;
    BigInt series;
    BigInt closed_form;
};

struct CrosscheckReport {
    bool passed;
    int max_n;
    int max_m;
    std::vector<CrosscheckMismatch> mismatches;  // empty when passed
};

/// Runs the three-way agreement check over the full table. Collects at most
/// `max_mismatches` offending cells (the first in row-major order).
CrosscheckReport crosscheck(int max_n, int max_m, int max_mismatches = 1);

}  // namespace gapprob
