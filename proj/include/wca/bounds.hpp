#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wca/bitmatrix.hpp"

namespace wca {

// Counting limits for matrices with the assignment property: every column
// can hold at most k-1 zeros (otherwise k rows stack into fewer than k
// non-null columns), so the total number of ones N satisfies
// N >= k(n-k+1), and with l_max the largest per-user code count,
// n*l_max >= k(n-k+1).

struct OptimalityReport {
    int n = 0;
    int k = 0;
    std::int64_t ones = 0;           ///< N, total ones
    std::int64_t lower_bound = 0;    ///< k(n-k+1)
    int l_max = 0;                   ///< largest row weight
    std::int64_t per_row_bound = 0;  ///< ceil(k(n-k+1) / n), floor on l_max
    bool is_optimal = false;         ///< ones == lower_bound
    double ratio = 0.0;              ///< ones / lower_bound

    /// ratio as a reduced fraction (numerator, denominator).
    std::pair<std::int64_t, std::int64_t> ratio_fraction() const;

    /// Single-line record with all fields.
    std::string to_record() const;
};

/// Requires n >= k (the property itself needs that many rows).
OptimalityReport analyze(const BinaryMatrix& m);

/// Columns (1-based) holding at least k zeros. Any such column certifies
/// that the assignment property fails; an empty list decides nothing.
struct NecessityCheck {
    int k = 0;
    std::vector<int> columns;

    bool certifies_failure() const { return !columns.empty(); }
};

NecessityCheck check_necessity(const BinaryMatrix& m);

/// Ones-to-bound ratio of the even-k construction at full height
/// n = 2(k-1): counted from the built matrix, then cross-checked against
/// the closed form (k+1)/k (a mismatch throws).
struct RatioPoint {
    int k = 0;
    std::int64_t ones = 0;
    std::int64_t lower_bound = 0;
    double ratio = 0.0;
};

std::vector<RatioPoint> ratio_trend(const std::vector<int>& ks);

/// Empirical search for the smallest number of ones among matrices of the
/// given shape that satisfy the assignment property. Exhaustive when
/// n*k <= 20, otherwise seeded random sampling with greedy 1->0 descent.
/// Results are a found minimum, not a proven one.
struct MinOnesSearch {
    int n = 0;
    int k = 0;
    bool exhaustive = false;
    std::uint64_t candidates_checked = 0;
    std::int64_t best_ones = -1;  ///< -1 when no property-holding matrix was found
    std::optional<BinaryMatrix> best;
};

MinOnesSearch search_min_ones(int n, int k, std::uint64_t random_trials, std::uint64_t seed);

}  // namespace wca
