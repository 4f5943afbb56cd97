#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "test_support.hpp"
#include "wca/banded_assign.hpp"
#include "wca/bitmatrix.hpp"
#include "wca/prng.hpp"

using test_support::for_each_subset;
using wca::RowLabel;

namespace {

// Checks everything fast_assign promises for one selection.
void check_fast_assign(int k, const std::vector<int>& chosen) {
    const wca::FastAssignResult result = wca::fast_assign(k, chosen);

    REQUIRE(result.matrix.rows() == k);
    REQUIRE(result.matrix.cols() == k);
    CHECK(wca::check_diagonalized(result.matrix));

    // the placed rows are exactly the selection
    std::vector<int> placed = result.slot_rows;
    std::sort(placed.begin(), placed.end());
    std::vector<int> wanted = chosen;
    std::sort(wanted.begin(), wanted.end());
    REQUIRE(placed == wanted);

    // every slot holds the full matrix's row it claims to hold
    const wca::BinaryMatrix full = wca::build_l_banded(k, 2 * k);
    for (int s = 0; s < k; ++s)
        for (int c = 0; c < k; ++c)
            CHECK(result.matrix.at(s, c) == full.at(result.slot_rows[s] - 1, c));

    // at most k moves, no row moved twice, and the trace tells the truth
    CHECK(result.trace.size() <= static_cast<std::size_t>(k));
    std::vector<char> moved(2 * k + 1, 0);
    for (const wca::RowMove& move : result.trace) {
        CHECK_FALSE(moved[move.row]);
        moved[move.row] = 1;
        CHECK(move.from_slot == move.row);
        CHECK(result.slot_rows[move.to_slot - 1] == move.row);
    }
    for (int s = 0; s < k; ++s)
        if (!moved[result.slot_rows[s]]) CHECK(result.slot_rows[s] == s + 1);
}

}  // namespace

TEST_CASE("row labels classify duplicate pairs") {
    const auto labels = wca::label_rows(5, {1, 6, 2, 7, 5});
    const std::vector<RowLabel> expected{
        RowLabel::Double, RowLabel::Double, RowLabel::Void, RowLabel::Void, RowLabel::Single,
        RowLabel::Double, RowLabel::Double, RowLabel::Void, RowLabel::Void, RowLabel::Single,
    };
    CHECK(labels == expected);
}

TEST_CASE("label_rows validates the selection") {
    CHECK_THROWS_WITH_AS(wca::label_rows(5, {1, 2, 3}), "chosen must contain exactly k rows",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(wca::label_rows(5, {1, 2, 3, 4, 11}),
                         "chosen row index out of range 1..2k", std::invalid_argument);
    CHECK_THROWS_WITH_AS(wca::label_rows(5, {1, 2, 3, 4, 0}),
                         "chosen row index out of range 1..2k", std::invalid_argument);
    CHECK_THROWS_WITH_AS(wca::label_rows(5, {1, 2, 3, 4, 4}), "duplicate chosen row index",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(wca::label_rows(4, {1, 2, 3, 4}), "k must be odd",
                         std::invalid_argument);
}

TEST_CASE("couples nest but never cross") {
    // two doubles followed by two voids: the inner couple sits inside the
    // outer one's run
    const auto labels = wca::label_rows(5, {1, 6, 2, 7, 5});
    const wca::ClusterPlan plan = wca::plan_clusters(labels, 5);
    REQUIRE(plan.couples.size() == 2);
    CHECK(plan.couples[0] == std::pair<int, int>{1, 4});
    CHECK(plan.couples[1] == std::pair<int, int>{2, 3});
    REQUIRE(plan.clusters.size() == 2);
    CHECK(plan.clusters[0] == std::vector<int>{1, 2, 3, 4});
    CHECK(plan.clusters[1] == std::vector<int>{2, 3});
}

TEST_CASE("clusters wrap around cyclically") {
    // doubles at slots 3 and 4, voids at 1 and 2: the pairing has to wrap
    const auto labels = wca::label_rows(5, {3, 8, 4, 9, 5});
    const wca::ClusterPlan plan = wca::plan_clusters(labels, 5);
    REQUIRE(plan.couples.size() == 2);
    CHECK(plan.couples[0] == std::pair<int, int>{3, 2});
    CHECK(plan.couples[1] == std::pair<int, int>{4, 1});
    CHECK(plan.clusters[0] == std::vector<int>{3, 4, 5, 1, 2});
    CHECK(plan.clusters[1] == std::vector<int>{4, 5, 1});
}

TEST_CASE("plan_clusters validates its input") {
    CHECK_THROWS_AS(wca::plan_clusters(std::vector<RowLabel>(9, RowLabel::Single), 5),
                    std::invalid_argument);
    auto labels = wca::label_rows(3, {1, 2, 3});
    labels[3] = RowLabel::Void;  // breaks the j / j+k pairing
    CHECK_THROWS_AS(wca::plan_clusters(labels, 3), std::invalid_argument);
    std::vector<RowLabel> unbalanced(6, RowLabel::Single);
    unbalanced[0] = unbalanced[3] = RowLabel::Double;
    CHECK_THROWS_AS(wca::plan_clusters(unbalanced, 3), std::invalid_argument);
}

TEST_CASE("fast_assign on a nested selection") {
    const wca::FastAssignResult result = wca::fast_assign(5, {1, 6, 2, 7, 5});
    CHECK(result.slot_rows == std::vector<int>{1, 6, 2, 7, 5});
    const std::vector<wca::RowMove> expected{{6, 6, 2}, {2, 2, 3}, {7, 7, 4}};
    CHECK(result.trace == expected);
    CHECK(result.trace_lines() ==
          "move row 6 : slot 6 -> slot 2\n"
          "move row 2 : slot 2 -> slot 3\n"
          "move row 7 : slot 7 -> slot 4\n");
    check_fast_assign(5, {1, 6, 2, 7, 5});
}

TEST_CASE("fast_assign on a single-double selection") {
    const wca::FastAssignResult result = wca::fast_assign(5, {1, 6, 2, 3, 4});
    CHECK(result.slot_rows == std::vector<int>{1, 6, 2, 3, 4});
    CHECK(result.trace.size() == 4);
    check_fast_assign(5, {1, 6, 2, 3, 4});
}

TEST_CASE("fast_assign when the walk starts mid-cycle") {
    const wca::FastAssignResult result = wca::fast_assign(5, {3, 8, 4, 9, 5});
    CHECK(result.slot_rows == std::vector<int>{9, 5, 3, 8, 4});
    check_fast_assign(5, {3, 8, 4, 9, 5});
}

TEST_CASE("fast_assign handles the identity and the shifted copy") {
    const wca::FastAssignResult upper = wca::fast_assign(5, {1, 2, 3, 4, 5});
    CHECK(upper.slot_rows == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(upper.trace.empty());

    // all lower copies land on their home slots; every row "moves" down
    const wca::FastAssignResult lower = wca::fast_assign(5, {6, 7, 8, 9, 10});
    CHECK(lower.slot_rows == std::vector<int>{6, 7, 8, 9, 10});
    CHECK(lower.trace.size() == 5);
}

TEST_CASE("fast_assign covers every selection exhaustively") {
    for (int k : {3, 5}) {
        for_each_subset(2 * k, k,
                        [&](const std::vector<int>& chosen) { check_fast_assign(k, chosen); });
    }
}

TEST_CASE("fast_assign matches sampled selections for larger k") {
    std::mt19937_64 gen(wca::mix64(404));
    for (int k : {7, 9}) {
        for (int trial = 0; trial < 200; ++trial)
            check_fast_assign(k, wca::random_subset(gen, 2 * k, k));
    }
}

TEST_CASE("is_full_banded recognizes exactly the full band matrix") {
    for (int k : {3, 5, 7}) CHECK(wca::is_full_banded(wca::build_l_banded(k, 2 * k)));
    CHECK_FALSE(wca::is_full_banded(wca::build_l_banded(5, 9)));
    CHECK_FALSE(wca::is_full_banded(wca::build_augmented_l_banded(6, 10)));
    CHECK_FALSE(wca::is_full_banded(wca::BinaryMatrix(6, 3, std::vector<std::uint8_t>(18, 1))));

    // one flipped cell breaks the shape
    const auto band = wca::build_l_banded(3, 6);
    std::vector<std::uint8_t> cells;
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 3; ++c) cells.push_back(band.at(r, c) ? 1 : 0);
    cells[2] = 1;
    CHECK_FALSE(wca::is_full_banded(wca::BinaryMatrix(6, 3, std::move(cells))));
}

TEST_CASE("assign_with_fallback dispatches to the fast path") {
    const auto m = wca::build_l_banded(5, 10);
    const auto fast = wca::assign_with_fallback(m, {1, 6, 2, 7, 5});
    REQUIRE(fast.result.ok());
    CHECK(fast.used_fast_path);
    CHECK(fast.relocations == 3);
    CHECK(fast.trace.size() == 3);
    for (const auto& [user, code] : fast.result.assignment->pairs)
        CHECK(m.at(user - 1, code - 1));

    // a partial request goes through matching
    const auto partial = wca::assign_with_fallback(m, {1, 6, 2});
    REQUIRE(partial.result.ok());
    CHECK_FALSE(partial.used_fast_path);
    CHECK(partial.relocations == 0);
    CHECK(partial.trace.empty());

    // so does any non-band matrix, even square with k users
    const auto augmented = wca::build_augmented_l_banded(4, 6);
    const auto matched = wca::assign_with_fallback(augmented, {1, 2, 3, 4});
    REQUIRE(matched.result.ok());
    CHECK_FALSE(matched.used_fast_path);
}

TEST_CASE("assign_with_fallback surfaces failures as witnesses") {
    const auto m = wca::BinaryMatrix::from_rows({{1, 0, 0}, {1, 0, 0}, {0, 1, 1}});
    const auto result = wca::assign_with_fallback(m, {1, 2});
    REQUIRE_FALSE(result.result.ok());
    CHECK(result.result.witness->rows == std::vector<int>{1, 2});
    CHECK_FALSE(result.used_fast_path);
}

TEST_CASE("fast path and matching agree on feasibility everywhere") {
    const int k = 5;
    const auto m = wca::build_l_banded(k, 2 * k);
    for_each_subset(2 * k, k, [&](const std::vector<int>& chosen) {
        CHECK(wca::find_assignment(m, chosen).ok());
    });
}
