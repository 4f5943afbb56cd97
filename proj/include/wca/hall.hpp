#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wca/bitmatrix.hpp"

namespace wca {

// The assignment property: every choice of k distinct rows can be rearranged
// into a k x k matrix with an all-ones diagonal, i.e. any k users can be
// given k pairwise distinct codes they all monitor. By Hall's theorem this
// holds iff every m-row stack spans at least m non-null columns, for every
// m <= k.

/// A certificate that the property fails: a set of rows that together span
/// fewer non-null columns than there are rows. Row and column numbers are
/// 1-based and sorted ascending; cols is exactly the union of the supports
/// of rows.
struct HallWitness {
    std::vector<int> rows;
    std::vector<int> cols;
};

enum class VerifyMethod { exhaustive, bruteforce };

struct VerificationReport {
    bool holds = false;
    std::optional<HallWitness> witness;
    VerifyMethod method = VerifyMethod::exhaustive;
    /// Column subsets scanned (exhaustive) or row subsets tested (bruteforce)
    /// before the verdict.
    std::uint64_t cases_checked = 0;

    /// "HOLDS" or "FAILS rows=<i1,...> cols=<t1,...>".
    std::string to_record() const;
};

/// One code per user, at most one user per code. Pairs are (user, code),
/// 1-based, sorted by user.
struct CodeAssignment {
    std::vector<std::pair<int, int>> pairs;

    /// One "user <i> -> code <t>" line per pair.
    std::string to_lines() const;
};

struct AssignResult {
    std::optional<CodeAssignment> assignment;
    std::optional<HallWitness> witness;

    bool ok() const { return assignment.has_value(); }
};

/// Decides the assignment property by scanning column subsets; cost is about
/// 2^k * n * k bit operations, practical up to k ~ 22. Requires n >= k and
/// k <= 63. Deterministic: subsets are scanned in ascending mask order.
VerificationReport verify_exhaustive(const BinaryMatrix& m);

/// Independent oracle for the same verdict: enumerates every k-subset of
/// rows and tests for a perfect matching of rows to columns through 1-cells.
/// Cost is C(n, k) matchings, practical up to n ~ 16. Requires n >= k.
VerificationReport verify_bruteforce(const BinaryMatrix& m);

/// Matches each listed user (1-based, distinct, at most k of them) to its
/// own code via augmenting paths. Deterministic: users are processed in
/// ascending order and columns probed in ascending order. On failure the
/// result carries a Hall-violating subset of the given users instead.
AssignResult find_assignment(const BinaryMatrix& m, const std::vector<int>& users);

/// True iff m is square with an all-ones diagonal.
bool check_diagonalized(const BinaryMatrix& m);

/// Method selection used by tooling: exhaustive when k <= 20, otherwise
/// bruteforce when C(n, k) <= 10^6, otherwise nothing is feasible.
std::optional<VerifyMethod> recommended_method(int n, int k);

}  // namespace wca
