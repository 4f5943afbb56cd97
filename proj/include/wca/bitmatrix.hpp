#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wca {

/// Dense 0/1 matrix over users (rows) and codes (columns).
///
/// Immutable after construction: every transform returns a new value, so
/// shared instances are safe to read from any number of threads. Raw cell
/// indices are 0-based; user and code numbers in tables, reports and file
/// formats are 1-based.
class BinaryMatrix {
  public:
    BinaryMatrix(int rows, int cols, std::vector<std::uint8_t> cells);

    static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    bool at(int row, int col) const;

    std::span<const std::uint8_t> row(int row) const;

    /// Support of one row as a bitmask: bit c is set iff cell (row, c) is 1.
    /// Requires cols() <= 63.
    std::uint64_t row_mask(int row) const;

    int row_weight(int row) const;

    bool operator==(const BinaryMatrix& other) const = default;

  private:
    int rows_;
    int cols_;
    std::vector<std::uint8_t> cells_;
};

/// Per-user lists of assigned code numbers. Code numbers are 1-based and the
/// canonical form keeps every list sorted ascending; an all-zero row maps to
/// an empty list.
struct AssignmentTable {
    int k = 0;
    std::vector<std::vector<int>> rows;

    bool operator==(const AssignmentTable& other) const = default;
};

/// Cyclic band construction. Row j (1-based) is the (j-1)-position rightward
/// cyclic shift of l = (k+1)/2 ones followed by k-l zeros, so rows j and j+k
/// are identical and column weights are uniform. Requires odd k >= 3 and
/// k <= n <= 2k; n < 2k keeps the leading n rows.
BinaryMatrix build_l_banded(int k, int n);

/// Band construction for even k >= 4: the cyclic band matrix over k-1 columns
/// with l = k/2, extended by a final column whose upper k-1 entries are 0 and
/// lower k-1 entries are 1. Requires k <= n <= 2(k-1); n < 2(k-1) keeps the
/// leading n rows.
BinaryMatrix build_augmented_l_banded(int k, int n);

AssignmentTable to_table(const BinaryMatrix& m);
BinaryMatrix from_table(const AssignmentTable& table);

/// Output cell (i, t) = input cell (row_perm[i], col_perm[t]). Both
/// permutations are 0-based and must be bijections on their index range.
BinaryMatrix permute(const BinaryMatrix& m, const std::vector<int>& row_perm,
                     const std::vector<int>& col_perm);

struct RowWeightProfile {
    std::int64_t total_ones = 0;
    int max_row_weight = 0;
    std::vector<int> row_weights;
};

RowWeightProfile row_weight_profile(const BinaryMatrix& m);

}  // namespace wca
