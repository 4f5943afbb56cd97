#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wca/bitmatrix.hpp"
#include "wca/hall.hpp"

namespace wca {

// Fast code assignment on the full cyclic band matrix (n = 2k): rows j and
// j+k are identical, so a selection of k rows is described per pair as
// Void (neither chosen), Single (one chosen) or Double (both chosen), and a
// matrix with an all-ones diagonal is reachable by relocating each selected
// row at most once.

enum class RowLabel { Void, Single, Double };

/// Labels all 2k rows of the full band matrix for a selection of exactly k
/// distinct rows from {1..2k}. Rows j and j+k always carry the same label.
/// Requires odd k >= 3.
std::vector<RowLabel> label_rows(int k, const std::vector<int>& chosen);

/// Pairing of Double and Void slots in the upper submatrix. Couples are
/// (double_slot, void_slot), 1-based, sorted by double slot; each cluster
/// lists the cyclic slot run from its double slot to its void slot
/// inclusive. Couples never cross, but they may nest (a couple can lie
/// entirely inside another's run); nested couples are resolved innermost
/// first by fast_assign.
struct ClusterPlan {
    std::vector<std::pair<int, int>> couples;
    std::vector<std::vector<int>> clusters;
};

/// Derives the cluster plan from per-row labels (as produced by label_rows).
/// Requires consistent labels: 2k entries, rows j and j+k equal, and as many
/// Double pairs as Void pairs.
ClusterPlan plan_clusters(const std::vector<RowLabel>& labels, int k);

/// One relocation: row (1-based index in the 2k-row matrix) left from_slot
/// and now fills to_slot. Slots above k are positions in the lower
/// submatrix.
struct RowMove {
    int row;
    int from_slot;
    int to_slot;

    bool operator==(const RowMove& other) const = default;
};

/// One "move row <j> : slot <a> -> slot <b>" line per relocation.
std::string format_trace(const std::vector<RowMove>& trace);

struct FastAssignResult {
    BinaryMatrix matrix;         ///< k x k, all-ones diagonal
    std::vector<int> slot_rows;  ///< slot s (1-based) holds row slot_rows[s-1]
    std::vector<RowMove> trace;  ///< at most k moves, each row at most once

    std::string trace_lines() const { return format_trace(trace); }
};

/// Rearranges the k chosen rows of the full band matrix (n = 2k) into a
/// k x k matrix with an all-ones diagonal in O(k) relocations, without any
/// matching search. Requires odd k >= 3 and exactly k distinct chosen rows
/// in {1..2k}.
FastAssignResult fast_assign(int k, const std::vector<int>& chosen);

/// True iff m is exactly the full cyclic band matrix for some odd k >= 3
/// (n = 2k, every row a cyclic shift of l ones).
bool is_full_banded(const BinaryMatrix& m);

struct DispatchedAssignment {
    AssignResult result;
    bool used_fast_path = false;
    int relocations = 0;         ///< meaningful on the fast path
    std::vector<RowMove> trace;  ///< empty on the matching path
};

/// Uses fast_assign when m is the full band matrix and exactly k rows are
/// chosen; otherwise falls back to matching via find_assignment. Failures of
/// the fallback (for matrices without the assignment property) propagate as
/// a witness.
DispatchedAssignment assign_with_fallback(const BinaryMatrix& m, const std::vector<int>& chosen);

}  // namespace wca
