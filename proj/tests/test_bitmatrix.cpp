#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "wca/bitmatrix.hpp"

namespace {

std::vector<std::vector<int>> rows_of(const wca::BinaryMatrix& m) {
    std::vector<std::vector<int>> rows(m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) rows[r].push_back(m.at(r, c) ? 1 : 0);
    return rows;
}

}  // namespace

TEST_CASE("matrix construction and accessors") {
    const auto m = wca::BinaryMatrix::from_rows({{1, 0, 1}, {0, 1, 0}});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.at(0, 0));
    CHECK_FALSE(m.at(0, 1));
    CHECK(m.row_weight(0) == 2);
    CHECK(m.row_weight(1) == 1);
    CHECK(m.row_mask(0) == 0b101);
    CHECK(m.row_mask(1) == 0b010);
    CHECK(m == wca::BinaryMatrix(2, 3, {1, 0, 1, 0, 1, 0}));

    CHECK_THROWS_AS(m.at(2, 0), std::out_of_range);
    CHECK_THROWS_AS(m.at(0, 3), std::out_of_range);
    CHECK_THROWS_AS(m.at(-1, 0), std::out_of_range);
}

TEST_CASE("matrix construction rejects bad input") {
    CHECK_THROWS_AS(wca::BinaryMatrix(2, 2, {1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(wca::BinaryMatrix(2, 2, {1, 0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(wca::BinaryMatrix(0, 2, {}), std::invalid_argument);
    CHECK_THROWS_AS(wca::BinaryMatrix::from_rows({}), std::invalid_argument);
    CHECK_THROWS_AS(wca::BinaryMatrix::from_rows({{1, 0}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(wca::BinaryMatrix::from_rows({{1, 3}}), std::invalid_argument);
}

TEST_CASE("row masks need at most 63 columns") {
    const wca::BinaryMatrix wide(1, 64, std::vector<std::uint8_t>(64, 1));
    CHECK_THROWS_AS(wide.row_mask(0), std::invalid_argument);
}

TEST_CASE("band matrix k=3") {
    const auto m = wca::build_l_banded(3, 3);
    CHECK(rows_of(m) == std::vector<std::vector<int>>{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
}

TEST_CASE("band matrix k=5 full height") {
    const auto m = wca::build_l_banded(5, 10);
    const std::vector<std::vector<int>> expected{
        {1, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 1, 1, 1}, {1, 0, 0, 1, 1}, {1, 1, 0, 0, 1},
        {1, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 1, 1, 1}, {1, 0, 0, 1, 1}, {1, 1, 0, 0, 1},
    };
    CHECK(rows_of(m) == expected);
    // rows j and j+k are identical
    for (int j = 0; j < 5; ++j)
        for (int c = 0; c < 5; ++c) CHECK(m.at(j, c) == m.at(j + 5, c));
}

TEST_CASE("band matrix k=7 partial height") {
    const auto m = wca::build_l_banded(7, 11);
    const std::vector<std::vector<int>> expected{
        {1, 1, 1, 1, 0, 0, 0}, {0, 1, 1, 1, 1, 0, 0}, {0, 0, 1, 1, 1, 1, 0},
        {0, 0, 0, 1, 1, 1, 1}, {1, 0, 0, 0, 1, 1, 1}, {1, 1, 0, 0, 0, 1, 1},
        {1, 1, 1, 0, 0, 0, 1}, {1, 1, 1, 1, 0, 0, 0}, {0, 1, 1, 1, 1, 0, 0},
        {0, 0, 1, 1, 1, 1, 0}, {0, 0, 0, 1, 1, 1, 1},
    };
    CHECK(rows_of(m) == expected);
}

TEST_CASE("band matrix rejects bad shapes") {
    CHECK_THROWS_WITH_AS(wca::build_l_banded(4, 8), "k must be odd", std::invalid_argument);
    CHECK_THROWS_WITH_AS(wca::build_l_banded(1, 2), "k must be >= 3", std::invalid_argument);
    CHECK_THROWS_WITH_AS(wca::build_l_banded(5, 4), "n must be in [k, 2k]", std::invalid_argument);
    CHECK_THROWS_WITH_AS(wca::build_l_banded(5, 11), "n must be in [k, 2k]", std::invalid_argument);
}

TEST_CASE("augmented band matrix k=4") {
    const auto m = wca::build_augmented_l_banded(4, 4);
    const std::vector<std::vector<int>> expected{
        {1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}, {1, 1, 0, 1}};
    CHECK(rows_of(m) == expected);
}

TEST_CASE("augmented band matrix k=6 full height") {
    const auto m = wca::build_augmented_l_banded(6, 10);
    // first five columns: the k=5 band matrix; last column: zeros over the
    // upper five rows, ones over the lower five
    const auto band = wca::build_l_banded(5, 10);
    for (int r = 0; r < 10; ++r) {
        for (int c = 0; c < 5; ++c) CHECK(m.at(r, c) == band.at(r, c));
        CHECK(m.at(r, 5) == (r >= 5));
    }
}

TEST_CASE("augmented band matrix rejects bad shapes") {
    CHECK_THROWS_WITH_AS(wca::build_augmented_l_banded(5, 8), "k must be even",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(wca::build_augmented_l_banded(2, 2), "k must be >= 4",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(wca::build_augmented_l_banded(6, 11), "n must be in [k, 2(k-1)]",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(wca::build_augmented_l_banded(6, 5), "n must be in [k, 2(k-1)]",
                         std::invalid_argument);
}

TEST_CASE("table round trip") {
    const auto m = wca::build_l_banded(5, 7);
    const wca::AssignmentTable table = wca::to_table(m);
    CHECK(table.k == 5);
    CHECK(table.rows.size() == 7);
    CHECK(table.rows[0] == std::vector<int>{1, 2, 3});
    CHECK(table.rows[3] == std::vector<int>{1, 4, 5});
    CHECK(wca::from_table(table) == m);
}

TEST_CASE("table with an all-zero row round trips") {
    const wca::BinaryMatrix m(3, 2, {1, 0, 0, 0, 0, 1});
    const wca::AssignmentTable table = wca::to_table(m);
    CHECK(table.rows[1].empty());
    CHECK(wca::from_table(table) == m);
}

TEST_CASE("from_table rejects bad input") {
    wca::AssignmentTable table;
    table.k = 3;
    table.rows = {{1, 4}};
    CHECK_THROWS_WITH_AS(wca::from_table(table), "code number out of range 1..k",
                         std::invalid_argument);
    table.rows = {{2, 2}};
    CHECK_THROWS_WITH_AS(wca::from_table(table), "duplicate code number within a row",
                         std::invalid_argument);
    table.rows = {};
    CHECK_THROWS_WITH_AS(wca::from_table(table), "table must contain at least one row",
                         std::invalid_argument);
}

TEST_CASE("permute moves cells as specified") {
    const auto m = wca::BinaryMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto p = wca::permute(m, {2, 0, 1}, {0, 2, 1});
    // output (i, t) = input (row_perm[i], col_perm[t])
    for (int i = 0; i < 3; ++i)
        for (int t = 0; t < 3; ++t) {
            const int src_row = std::vector<int>{2, 0, 1}[i];
            const int src_col = std::vector<int>{0, 2, 1}[t];
            CHECK(p.at(i, t) == m.at(src_row, src_col));
        }

    const std::vector<int> identity{0, 1, 2};
    CHECK(wca::permute(m, identity, identity) == m);
    CHECK_THROWS_AS(wca::permute(m, {0, 1}, identity), std::invalid_argument);
    CHECK_THROWS_AS(wca::permute(m, {0, 1, 1}, identity), std::invalid_argument);
    CHECK_THROWS_AS(wca::permute(m, identity, {0, 1, 3}), std::invalid_argument);
}

TEST_CASE("row weight profile") {
    const auto m = wca::build_augmented_l_banded(6, 10);
    const wca::RowWeightProfile profile = wca::row_weight_profile(m);
    CHECK(profile.total_ones == 35);
    CHECK(profile.max_row_weight == 4);
    CHECK(profile.row_weights == std::vector<int>{3, 3, 3, 3, 3, 4, 4, 4, 4, 4});
}
