#pragma once

// Test-only reference implementations, kept independent of the library code
// paths they are used to check.

#include <cstdint>
#include <functional>
#include <vector>

#include "gapprob/bigint.hpp"

namespace testsupport {

/// Pascal-triangle binomial table, the independent cross-check for the
/// multiplicative binom() in the library.
class PascalTable {
public:
    explicit PascalTable(int max_n) : rows_(static_cast<std::size_t>(max_n) + 1) {
        for (int n = 0; n <= max_n; ++n) {
            auto& row = rows_[static_cast<std::size_t>(n)];
            row.resize(static_cast<std::size_t>(n) + 1, gapprob::BigInt(1));
            for (int k = 1; k < n; ++k)
                row[static_cast<std::size_t>(k)] =
                    rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
                    rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
        }
    }

    gapprob::BigInt get(int n, int k) const {
        if (n < 0 || k < 0 || k > n) return gapprob::BigInt(0);
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

private:
    std::vector<std::vector<gapprob::BigInt>> rows_;
};

/// Recursive enumeration of all m-subsets of 1..n in lexicographic order,
/// written without the library's successor iteration so the two can check
/// each other.
inline void for_each_subset(int n, int m, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> current;
    current.reserve(static_cast<std::size_t>(m));
    std::function<void(int)> recurse = [&](int next) {
        if (static_cast<int>(current.size()) == m) {
            fn(current);
            return;
        }
        int remaining = m - static_cast<int>(current.size());
        for (int v = next; v <= n - remaining + 1; ++v) {
            current.push_back(v);
            recurse(v + 1);
            current.pop_back();
        }
    };
    recurse(1);
}

/// Deterministic 64-bit mixer for generating reproducible pseudo-random test
/// operands without touching the library's RNG.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace testsupport
