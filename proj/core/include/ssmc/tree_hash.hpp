#pragma once

#include <cstdint>

#include "ssmc/branching_matrix.hpp"

namespace ssmc {

// Canonical hash of the unlabeled tree generated from `type` to the given
// depth: children hashes are sorted before combining, so two matrices generate
// identical depth-d trees from corresponding types iff the hashes agree
// (modulo collisions of the 64-bit mix).
std::uint64_t canonical_tree_hash(const BranchingMatrix& m, int type, int depth);

// Depth-d unlabeled tree equality between m's type i and r's type j for all
// mapped pairs of a reduction type_map.
bool trees_match_under_map(const BranchingMatrix& m, const BranchingMatrix& reduced,
                           const std::vector<int>& type_map, int depth);

}  // namespace ssmc
