#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ssmc/branching_matrix.hpp"

namespace ssmc {

// Lattice directions in the fixed encoding N=0, E=1, S=2, W=3.
enum class Direction : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };

constexpr std::array<std::pair<int, int>, 4> kDirVec{{{0, 1}, {1, 0}, {0, -1}, {-1, 0}}};

inline Direction opposite(Direction d) {
    return static_cast<Direction>((static_cast<int>(d) + 2) & 3);
}
char direction_char(Direction d);

// Ordering of the four directions at a vertex; rank[d] = position in the
// ordering, smaller = earlier. The default follows N < E < W < S.
struct Ordering {
    std::array<std::uint8_t, 4> rank{0, 1, 3, 2};

    static Ordering nesw_default() { return Ordering{}; }
    static Ordering from_permutation(const std::array<Direction, 4>& smallest_first);
    void validate() const;
};

// Per-vertex ordering for SAW-tree enumeration; homogeneous orderings return
// the same ranks everywhere.
using OrderingField = std::function<Ordering(int x, int y)>;
OrderingField homogeneous(const Ordering& o);
OrderingField seeded_random_field(std::uint64_t seed);

struct CycleFreeOptions {
    bool trim_boundary = false;
    Ordering ordering = Ordering::nesw_default();
    std::int64_t state_cap = 10'000'000;
    // Untrimmed machines quotient window states by the lattice symmetries
    // fixing the walk end; tests can disable this to replay concrete walks.
    bool symmetry_quotient = true;
};

// Branching matrix of walks on Z^2 truncated when closing a cycle of length
// <= ell. States are canonicalized walk-history windows; with trim_boundary
// the boundary-fixing rule of the SAW-tree construction removes occupied
// closings together with their parents. Output is deterministic.
BranchingMatrix build_cycle_free_matrix(int ell, const CycleFreeOptions& opts);

// Finite truncation of T_saw^sigma(Z^2): set of surviving root paths encoded
// over "NESW". Ground-truth oracle for containment checks.
struct SawTreeOptions {
    int box_radius = 8;
    std::int64_t node_cap = 10'000'000;
};
std::set<std::string> enumerate_saw_tree(int depth, const OrderingField& sigma,
                                         const SawTreeOptions& opts = {});

// Paths of T_M to the given depth, readable as direction strings. Requires
// every non-root label to end in its entering direction character, which
// holds for window machines and the named machines, not for reduced ones.
std::set<std::string> machine_paths(const BranchingMatrix& m, int depth,
                                    std::int64_t node_cap = 10'000'000);

}  // namespace ssmc
