#include "wca/banded_assign.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace wca {

namespace {

struct PairFlags {
    std::vector<char> upper;  // pair j-1 has its upper row chosen
    std::vector<char> lower;
};

PairFlags chosen_flags(int k, const std::vector<int>& chosen) {
    if (static_cast<int>(chosen.size()) != k)
        throw std::invalid_argument("chosen must contain exactly k rows");
    PairFlags flags{std::vector<char>(k, 0), std::vector<char>(k, 0)};
    for (int row : chosen) {
        if (row < 1 || row > 2 * k) throw std::invalid_argument("chosen row index out of range 1..2k");
        char& flag = row <= k ? flags.upper[row - 1] : flags.lower[row - 1 - k];
        if (flag) throw std::invalid_argument("duplicate chosen row index");
        flag = 1;
    }
    return flags;
}

void require_odd_k(int k) {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    if (k % 2 == 0) throw std::invalid_argument("k must be odd");
}

// Boundary (0-based slot count from the top) after which the running count
// of displaced rows is at its cyclic minimum; starting the walk there keeps
// the pending count non-negative everywhere.
int start_boundary(const std::vector<RowLabel>& upper) {
    int depth = 0, best = 0, start = 0;
    for (std::size_t s = 0; s < upper.size(); ++s) {
        if (upper[s] == RowLabel::Double) ++depth;
        if (upper[s] == RowLabel::Void) --depth;
        if (depth < best) {
            best = depth;
            start = static_cast<int>(s) + 1;
        }
    }
    return start % static_cast<int>(upper.size());
}

}  // namespace

std::vector<RowLabel> label_rows(int k, const std::vector<int>& chosen) {
    require_odd_k(k);
    const PairFlags flags = chosen_flags(k, chosen);
    std::vector<RowLabel> labels(2 * k, RowLabel::Void);
    for (int j = 0; j < k; ++j) {
        const int copies = flags.upper[j] + flags.lower[j];
        const RowLabel label = copies == 2   ? RowLabel::Double
                               : copies == 1 ? RowLabel::Single
                                             : RowLabel::Void;
        labels[j] = labels[j + k] = label;
    }
    return labels;
}

ClusterPlan plan_clusters(const std::vector<RowLabel>& labels, int k) {
    if (k < 1 || static_cast<int>(labels.size()) != 2 * k)
        throw std::invalid_argument("labels must cover all 2k rows");
    int doubles = 0, voids = 0;
    for (int j = 0; j < k; ++j) {
        if (labels[j] != labels[j + k])
            throw std::invalid_argument("rows j and j+k must carry the same label");
        if (labels[j] == RowLabel::Double) ++doubles;
        if (labels[j] == RowLabel::Void) ++voids;
    }
    if (doubles != voids)
        throw std::invalid_argument("labels must pair every Double with a Void (#D == #V)");

    const std::vector<RowLabel> upper(labels.begin(), labels.begin() + k);
    const int start = start_boundary(upper);

    // Match each Void slot to the most recent still-open Double slot above
    // it (cyclically). Starting at the minimum boundary guarantees the
    // stack never underflows, and the resulting couples never cross.
    ClusterPlan plan;
    std::vector<int> open;
    for (int i = 0; i < k; ++i) {
        const int s = (start + i) % k;
        if (upper[s] == RowLabel::Double) {
            open.push_back(s);
        } else if (upper[s] == RowLabel::Void) {
            if (open.empty()) throw std::logic_error("internal: unmatched Void slot");
            plan.couples.emplace_back(open.back() + 1, s + 1);
            open.pop_back();
        }
    }
    if (!open.empty()) throw std::logic_error("internal: unmatched Double slot");

    std::sort(plan.couples.begin(), plan.couples.end());
    for (const auto& [d, v] : plan.couples) {
        std::vector<int> run;
        for (int s = d; ; s = s % k + 1) {
            run.push_back(s);
            if (s == v) break;
        }
        plan.clusters.push_back(std::move(run));
    }
    return plan;
}

std::string format_trace(const std::vector<RowMove>& trace) {
    std::ostringstream out;
    for (const RowMove& move : trace)
        out << "move row " << move.row << " : slot " << move.from_slot << " -> slot "
            << move.to_slot << '\n';
    return out.str();
}

FastAssignResult fast_assign(int k, const std::vector<int>& chosen) {
    const std::vector<RowLabel> labels = label_rows(k, chosen);
    plan_clusters(labels, k);  // validates the pairing structure
    const PairFlags flags = chosen_flags(k, chosen);
    const int l = (k + 1) / 2;
    const BinaryMatrix full = build_l_banded(k, 2 * k);

    const std::vector<RowLabel> upper(labels.begin(), labels.begin() + k);
    const int start = start_boundary(upper);

    // Walk the slots cyclically from the minimum boundary. Each slot first
    // queues its chosen copies (upper copy ahead of the duplicate), then
    // takes the oldest pending row; a Void slot drains one pending row.
    // This executes nested couples innermost first: a duplicate entering a
    // run already carrying displaced rows simply joins the ripple. The
    // pending count can never exceed l-1 (it is bounded by the number of
    // Double pairs, at most (k-1)/2), which is exactly what keeps every
    // placed row on a 1-cell of its new diagonal position.
    std::deque<int> pending;
    std::vector<int> slot_rows(k, 0);
    for (int i = 0; i < k; ++i) {
        const int s = (start + i) % k;
        if (flags.upper[s]) pending.push_back(s + 1);
        if (flags.lower[s]) pending.push_back(s + 1 + k);
        if (pending.empty()) throw std::logic_error("internal: no row available for a slot");
        slot_rows[s] = pending.front();
        pending.pop_front();
        if (static_cast<int>(pending.size()) > l - 1)
            throw std::logic_error("internal: pending rows exceed the band width");
    }
    if (!pending.empty()) throw std::logic_error("internal: rows left over after the walk");

    std::vector<std::uint8_t> cells(static_cast<std::size_t>(k) * k);
    for (int s = 0; s < k; ++s) {
        const auto row = full.row(slot_rows[s] - 1);
        std::copy(row.begin(), row.end(), cells.begin() + static_cast<std::size_t>(s) * k);
    }
    FastAssignResult result{BinaryMatrix(k, k, std::move(cells)), std::move(slot_rows), {}};

    std::vector<int> placed = result.slot_rows;
    std::sort(placed.begin(), placed.end());
    std::vector<int> wanted = chosen;
    std::sort(wanted.begin(), wanted.end());
    if (placed != wanted) throw std::logic_error("internal: placed rows differ from the selection");
    for (int s = 0; s < k; ++s) {
        if (!result.matrix.at(s, s)) throw std::logic_error("internal: diagonal entry not covered");
        const int home = (result.slot_rows[s] - 1) % k;
        if ((s - home + k) % k > l - 1)
            throw std::logic_error("internal: a row was shifted beyond the band");
    }

    for (int s = 0; s < k; ++s) {
        const int row = result.slot_rows[s];
        if (row != s + 1) result.trace.push_back({row, row, s + 1});
    }
    return result;
}

bool is_full_banded(const BinaryMatrix& m) {
    const int k = m.cols();
    if (k < 3 || k % 2 == 0 || m.rows() != 2 * k) return false;
    const int l = (k + 1) / 2;
    for (int r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        const int home = r % k;
        for (int c = 0; c < k; ++c) {
            const bool in_band = (c - home + k) % k < l;
            if (static_cast<bool>(row[c]) != in_band) return false;
        }
    }
    return true;
}

DispatchedAssignment assign_with_fallback(const BinaryMatrix& m, const std::vector<int>& chosen) {
    DispatchedAssignment dispatched;
    if (is_full_banded(m) && static_cast<int>(chosen.size()) == m.cols()) {
        FastAssignResult fast = fast_assign(m.cols(), chosen);
        CodeAssignment assignment;
        for (int s = 0; s < m.cols(); ++s) assignment.pairs.emplace_back(fast.slot_rows[s], s + 1);
        std::sort(assignment.pairs.begin(), assignment.pairs.end());
        dispatched.result.assignment = std::move(assignment);
        dispatched.used_fast_path = true;
        dispatched.relocations = static_cast<int>(fast.trace.size());
        dispatched.trace = std::move(fast.trace);
    } else {
        dispatched.result = find_assignment(m, chosen);
    }
    return dispatched;
}

}  // namespace wca
