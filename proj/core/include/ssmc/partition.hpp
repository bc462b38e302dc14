#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssmc/branching_matrix.hpp"
#include "ssmc/rational.hpp"

namespace ssmc {

// Disjoint non-empty blocks covering [t].
struct Partition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    static Partition discrete(int t);
    // type -> block index; throws when blocks do not partition [t].
    std::vector<int> type_map(int t) const;

    std::string to_json() const;
    static Partition from_json(const std::string& text);
};

struct ConsistencyViolation {
    int block = 0;        // block containing the disagreeing pair
    int type_a = 0;
    int type_b = 0;
    int target_block = 0; // block over which the row sums differ
};

// A partition is consistent with M when all rows within a block have equal
// block-wise sums. Returns the first violation in block/type order.
std::optional<ConsistencyViolation> check_consistent(const BranchingMatrix& m, const Partition& c);

struct ReductionResult {
    BranchingMatrix reduced;
    Partition partition;
    std::vector<int> type_map;
};

// Quotient matrix M^C; rejects inconsistent partitions with the witness.
ReductionResult reduce(const BranchingMatrix& m, const Partition& c);

struct ProposeOptions {
    long iterations = 1000;
    double cluster_tol = 1e-9;
};

// Fixed-point clustering heuristic: iterate the recurrence at the given
// activity from the all-ones vector in double arithmetic and group types whose
// values agree within cluster_tol. The result is a proposal; callers must run
// check_consistent (or refine_to_consistent).
Partition propose_partition(const BranchingMatrix& m, const Activity& lambda,
                            const ProposeOptions& opts = {});

// Greedy refinement: split blocks by their block-sum signatures until
// check_consistent passes. Always terminates (singletons are consistent).
Partition refine_to_consistent(const BranchingMatrix& m, Partition c);

}  // namespace ssmc
