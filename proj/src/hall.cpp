#include "wca/hall.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wca {

namespace {

void append_joined(std::ostringstream& out, const std::vector<int>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ',';
        out << values[i];
    }
}

void require_shape(const BinaryMatrix& m) {
    if (m.rows() < m.cols())
        throw std::invalid_argument("matrix must have at least as many rows as columns (n >= k)");
}

std::vector<int> mask_to_columns(std::uint64_t mask) {
    std::vector<int> cols;
    for (int c = 0; mask; ++c, mask >>= 1)
        if (mask & 1) cols.push_back(c + 1);
    return cols;
}

}  // namespace

std::string VerificationReport::to_record() const {
    if (holds) return "HOLDS";
    std::ostringstream out;
    out << "FAILS rows=";
    append_joined(out, witness->rows);
    out << " cols=";
    append_joined(out, witness->cols);
    return out.str();
}

std::string CodeAssignment::to_lines() const {
    std::ostringstream out;
    for (const auto& [user, code] : pairs)
        out << "user " << user << " -> code " << code << '\n';
    return out.str();
}

VerificationReport verify_exhaustive(const BinaryMatrix& m) {
    require_shape(m);
    const int n = m.rows();
    const int k = m.cols();
    if (k > 63) throw std::invalid_argument("exhaustive verification supports at most 63 columns");

    std::vector<std::uint64_t> support(n);
    for (int r = 0; r < n; ++r) support[r] = m.row_mask(r);

    VerificationReport report;
    report.method = VerifyMethod::exhaustive;

    // The property holds iff every stack of m <= k distinct rows spans at
    // least m non-null columns. Scanning column subsets decides exactly
    // that. If some row set T spans fewer columns than |T|, let C be the
    // columns T's rows live in: then |C| <= k-1 and C supports at least
    // |T| > |C| rows. Conversely, if some column set C with |C| <= k-1
    // supports more than |C| rows, any |C|+1 of those rows span at most |C|
    // non-null columns. So the property fails iff some proper column subset
    // C supports more than |C| rows, which the loop below tests for every
    // mask in ascending order (the empty set catches all-zero rows).
    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t cset = 0; cset < full; ++cset) {
        ++report.cases_checked;
        const int capacity = std::popcount(cset);
        int inside = 0;
        for (int r = 0; r < n; ++r)
            if ((support[r] & ~cset) == 0) ++inside;
        if (inside > capacity) {
            HallWitness witness;
            std::uint64_t span = 0;
            for (int r = 0; r < n && static_cast<int>(witness.rows.size()) < capacity + 1; ++r) {
                if ((support[r] & ~cset) == 0) {
                    witness.rows.push_back(r + 1);
                    span |= support[r];
                }
            }
            witness.cols = mask_to_columns(span);
            report.holds = false;
            report.witness = std::move(witness);
            return report;
        }
    }
    report.holds = true;
    return report;
}

VerificationReport verify_bruteforce(const BinaryMatrix& m) {
    require_shape(m);
    const int n = m.rows();
    const int k = m.cols();

    VerificationReport report;
    report.method = VerifyMethod::bruteforce;

    // Testing only k-subsets is complete: any smaller row set extends to a
    // k-subset, and restricting that subset's matching gives distinct
    // representatives for the smaller set.
    std::vector<int> subset(k);
    std::iota(subset.begin(), subset.end(), 1);
    for (;;) {
        ++report.cases_checked;
        AssignResult result = find_assignment(m, subset);
        if (!result.ok()) {
            report.holds = false;
            report.witness = std::move(result.witness);
            return report;
        }
        // next k-combination of {1..n} in lexicographic order
        int i = k - 1;
        while (i >= 0 && subset[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    report.holds = true;
    return report;
}

namespace {

struct Matcher {
    const BinaryMatrix& m;
    const std::vector<int>& users;  // 1-based, ascending
    std::vector<int> owner;         // column -> index into users, or -1
    std::vector<char> visited;      // columns probed in the current round

    bool augment(int ui) {
        const auto row = m.row(users[ui] - 1);
        for (int c = 0; c < m.cols(); ++c) {
            if (!row[c] || visited[c]) continue;
            visited[c] = 1;
            if (owner[c] < 0 || augment(owner[c])) {
                owner[c] = ui;
                return true;
            }
        }
        return false;
    }
};

}  // namespace

AssignResult find_assignment(const BinaryMatrix& m, const std::vector<int>& users) {
    const int n = m.rows();
    const int k = m.cols();
    if (static_cast<int>(users.size()) > k)
        throw std::invalid_argument("cannot assign more users than there are codes (|users| <= k)");
    std::vector<int> sorted = users;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1 || sorted[i] > n) throw std::invalid_argument("user index out of range 1..n");
        if (i > 0 && sorted[i] == sorted[i - 1]) throw std::invalid_argument("duplicate user index");
    }

    Matcher matcher{m, sorted, std::vector<int>(k, -1), std::vector<char>(k, 0)};
    for (int ui = 0; ui < static_cast<int>(sorted.size()); ++ui) {
        std::fill(matcher.visited.begin(), matcher.visited.end(), 0);
        if (matcher.augment(ui)) continue;

        // No augmenting path from `ui`: the alternating tree is a Hall
        // violator. Its rows are `ui` plus the owners of every visited
        // column, and those columns are exactly the union of the rows'
        // supports, one fewer than the rows.
        HallWitness witness;
        witness.rows.push_back(sorted[ui]);
        for (int c = 0; c < k; ++c) {
            if (!matcher.visited[c]) continue;
            witness.cols.push_back(c + 1);
            witness.rows.push_back(sorted[matcher.owner[c]]);
        }
        std::sort(witness.rows.begin(), witness.rows.end());
        AssignResult result;
        result.witness = std::move(witness);
        return result;
    }

    CodeAssignment assignment;
    for (int c = 0; c < k; ++c)
        if (matcher.owner[c] >= 0) assignment.pairs.emplace_back(sorted[matcher.owner[c]], c + 1);
    std::sort(assignment.pairs.begin(), assignment.pairs.end());
    AssignResult result;
    result.assignment = std::move(assignment);
    return result;
}

bool check_diagonalized(const BinaryMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
    for (int i = 0; i < m.rows(); ++i)
        if (!m.at(i, i)) return false;
    return true;
}

std::optional<VerifyMethod> recommended_method(int n, int k) {
    if (k <= 20) return VerifyMethod::exhaustive;
    // C(n, k), capped to avoid overflow
    constexpr std::uint64_t limit = 1'000'000;
    std::uint64_t binom = 1;
    const int take = std::min(k, n - k);
    for (int i = 1; i <= take; ++i) {
        binom = binom * static_cast<std::uint64_t>(n - take + i) / i;
        if (binom > limit) return std::nullopt;
    }
    return VerifyMethod::bruteforce;
}

}  // namespace wca
