#pragma once

#include <string>
#include <vector>

namespace ssmc {

// Square non-negative integer matrix; entry (i,j) bounds how many type-j
// children a type-i vertex may have. Row i doubles as a child multiset.
struct BranchingMatrix {
    int t = 0;
    std::vector<std::vector<int>> rows;   // dense counts, rows[i][j] = M_ij
    std::vector<std::string> labels;      // optional, size t or empty
    std::vector<int> transient;           // sorted type indices excluded from recurrence analysis
    int root = 0;                         // designated root type

    int degree(int i) const;
    bool is_transient(int i) const;
    std::vector<int> recurrent_types() const;

    // Child multiset of row i expanded to a list of type indices (ascending).
    std::vector<int> expanded_row(int i) const;

    // Submatrix on the recurrent types, preserving their relative order.
    // Labels carried over; the map from new index to old index is returned
    // through old_index when non-null.
    BranchingMatrix drop_transient(std::vector<int>* old_index = nullptr) const;

    void validate() const;
    bool operator==(const BranchingMatrix&) const = default;
};

// Transient types = those that can occur only boundedly deep in T_M: anything
// not reachable from a cyclic strongly connected component.
std::vector<int> compute_transient_types(const BranchingMatrix& m);

std::string matrix_to_json(const BranchingMatrix& m);
BranchingMatrix matrix_from_json(const std::string& text);

}  // namespace ssmc
