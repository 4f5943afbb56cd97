#include "wca/bitmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace wca {

namespace {

std::size_t checked_cell_count(int rows, int cols) {
    if (rows < 1) throw std::invalid_argument("row count must be >= 1");
    if (cols < 1) throw std::invalid_argument("column count must be >= 1");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
}

}  // namespace

BinaryMatrix::BinaryMatrix(int rows, int cols, std::vector<std::uint8_t> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (cells_.size() != checked_cell_count(rows, cols))
        throw std::invalid_argument("cell buffer does not match the matrix dimensions");
    for (std::uint8_t v : cells_)
        if (v > 1) throw std::invalid_argument("cells must be 0 or 1");
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw std::invalid_argument("row count must be >= 1");
    const std::size_t cols = rows.front().size();
    std::vector<std::uint8_t> cells;
    cells.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("all rows must have the same length");
        for (int v : r) {
            if (v != 0 && v != 1) throw std::invalid_argument("cells must be 0 or 1");
            cells.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return BinaryMatrix(static_cast<int>(rows.size()), static_cast<int>(cols), std::move(cells));
}

bool BinaryMatrix::at(int row, int col) const {
    if (row < 0 || row >= rows_) throw std::out_of_range("row index out of range");
    if (col < 0 || col >= cols_) throw std::out_of_range("column index out of range");
    return cells_[static_cast<std::size_t>(row) * cols_ + col] != 0;
}

std::span<const std::uint8_t> BinaryMatrix::row(int row) const {
    if (row < 0 || row >= rows_) throw std::out_of_range("row index out of range");
    return {cells_.data() + static_cast<std::size_t>(row) * cols_, static_cast<std::size_t>(cols_)};
}

std::uint64_t BinaryMatrix::row_mask(int row) const {
    if (cols_ > 63) throw std::invalid_argument("row masks support at most 63 columns");
    std::uint64_t mask = 0;
    const auto r = this->row(row);
    for (int c = 0; c < cols_; ++c)
        if (r[c]) mask |= std::uint64_t{1} << c;
    return mask;
}

int BinaryMatrix::row_weight(int row) const {
    const auto r = this->row(row);
    int w = 0;
    for (std::uint8_t v : r) w += v;
    return w;
}

BinaryMatrix build_l_banded(int k, int n) {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    if (k % 2 == 0) throw std::invalid_argument("k must be odd");
    if (n < k || n > 2 * k) throw std::invalid_argument("n must be in [k, 2k]");
    const int l = (k + 1) / 2;
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * k, 0);
    for (int r = 0; r < n; ++r) {
        const int home = r % k;
        for (int p = 0; p < l; ++p)
            cells[static_cast<std::size_t>(r) * k + (home + p) % k] = 1;
    }
    return BinaryMatrix(n, k, std::move(cells));
}

BinaryMatrix build_augmented_l_banded(int k, int n) {
    if (k < 4) throw std::invalid_argument("k must be >= 4");
    if (k % 2 != 0) throw std::invalid_argument("k must be even");
    if (n < k || n > 2 * (k - 1)) throw std::invalid_argument("n must be in [k, 2(k-1)]");
    const BinaryMatrix band = build_l_banded(k - 1, 2 * (k - 1));
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * k, 0);
    for (int r = 0; r < n; ++r) {
        const auto src = band.row(r);
        for (int c = 0; c < k - 1; ++c)
            cells[static_cast<std::size_t>(r) * k + c] = src[c];
        cells[static_cast<std::size_t>(r) * k + (k - 1)] = r >= k - 1 ? 1 : 0;
    }
    return BinaryMatrix(n, k, std::move(cells));
}

AssignmentTable to_table(const BinaryMatrix& m) {
    AssignmentTable table;
    table.k = m.cols();
    table.rows.resize(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        for (int c = 0; c < m.cols(); ++c)
            if (row[c]) table.rows[r].push_back(c + 1);
    }
    return table;
}

BinaryMatrix from_table(const AssignmentTable& table) {
    if (table.rows.empty()) throw std::invalid_argument("table must contain at least one row");
    if (table.k < 1) throw std::invalid_argument("k must be >= 1");
    const int n = static_cast<int>(table.rows.size());
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * table.k, 0);
    for (int r = 0; r < n; ++r) {
        for (int code : table.rows[r]) {
            if (code < 1 || code > table.k)
                throw std::invalid_argument("code number out of range 1..k");
            std::uint8_t& cell = cells[static_cast<std::size_t>(r) * table.k + (code - 1)];
            if (cell) throw std::invalid_argument("duplicate code number within a row");
            cell = 1;
        }
    }
    return BinaryMatrix(n, table.k, std::move(cells));
}

namespace {

void check_permutation(const std::vector<int>& perm, int size, const char* what) {
    if (static_cast<int>(perm.size()) != size)
        throw std::invalid_argument(std::string(what) + " has the wrong length");
    std::vector<char> seen(size, 0);
    for (int v : perm) {
        if (v < 0 || v >= size || seen[v])
            throw std::invalid_argument(std::string(what) + " is not a permutation");
        seen[v] = 1;
    }
}

}  // namespace

BinaryMatrix permute(const BinaryMatrix& m, const std::vector<int>& row_perm,
                     const std::vector<int>& col_perm) {
    check_permutation(row_perm, m.rows(), "row permutation");
    check_permutation(col_perm, m.cols(), "column permutation");
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        const auto src = m.row(row_perm[r]);
        for (int c = 0; c < m.cols(); ++c)
            cells[static_cast<std::size_t>(r) * m.cols() + c] = src[col_perm[c]];
    }
    return BinaryMatrix(m.rows(), m.cols(), std::move(cells));
}

RowWeightProfile row_weight_profile(const BinaryMatrix& m) {
    RowWeightProfile profile;
    profile.row_weights.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        const int w = m.row_weight(r);
        profile.row_weights.push_back(w);
        profile.total_ones += w;
        profile.max_row_weight = std::max(profile.max_row_weight, w);
    }
    return profile;
}

}  // namespace wca
