#pragma once

#include <cstdint>
#include <vector>

#include "ssmc/branching_matrix.hpp"
#include "ssmc/grid.hpp"
#include "ssmc/rational.hpp"

namespace ssmc {

// Hard-core tree recurrence F for the recurrent types of a branching matrix:
//   F_i(x) = 1 / (1 + lambda * prod_{w in M_i} x_{t(w)}).
// Rows are taken over recurrent types only; callers pass matrices whose
// transient types were dropped (see BranchingMatrix::drop_transient).
class Recurrence {
  public:
    Recurrence(const BranchingMatrix& m, const Activity& lambda);

    int types() const { return static_cast<int>(rows_.size()); }
    const Activity& activity() const { return lambda_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    std::vector<Rat> eval_exact(const std::vector<Rat>& x) const;
    Rat eval_exact_row(const std::vector<int>& row, const std::vector<Rat>& x) const;

    // Exact evaluation followed by directed rounding to the grid of x.
    GridVector eval_down(const GridVector& x) const;
    GridVector eval_up(const GridVector& x) const;

    // n applications of the two-step composition; first={up} computes
    // (F_down . F_up)^n, first={down} computes (F_up . F_down)^n.
    enum class First { up, down };
    GridVector iterate_alternating(const GridVector& start, long n, First first) const;

    // Runs at least min_pairs compositions and continues until the composition
    // reaches a fixed point (the attracting rounded 2-cycle), up to cap pairs.
    // Returns the fixed point; sets *stable=false when the cap was hit first.
    GridVector iterate_to_cycle(const GridVector& start, long min_pairs, long cap, First first,
                                bool* stable = nullptr) const;

  private:
    GridVector eval_rounded(const GridVector& x, bool up) const;

    Activity lambda_;
    std::vector<std::vector<int>> rows_;  // expanded child type lists
};

// Boundary condition for the truncated tree of T_M.
//   odd:  boundary vertices occupied (unoccupancy 0) -- the root ends in the
//         occupied phase at depth 0;
//   even: boundary vertices unoccupied (unoccupancy 1);
//   free: the tree simply stops, leaves carry no constraint.
enum class Boundary { odd, even, free_boundary };

// Exact root unoccupancy marginal per recurrent type of the depth-L truncation
// of T_M, by bottom-up dynamic programming in rational arithmetic. Serves as
// the independent oracle for the rounded iteration code. The DP cost grows
// geometrically with L; evaluation aborts once numerators exceed
// max_total_bits.
std::vector<Rat> finite_tree_marginal(const BranchingMatrix& m, const Activity& lambda, int depth,
                                      Boundary boundary, std::int64_t max_total_bits = 1'500'000'000);

}  // namespace ssmc
