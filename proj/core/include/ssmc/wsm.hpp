#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ssmc/branching_matrix.hpp"
#include "ssmc/grid.hpp"
#include "ssmc/jacobian.hpp"
#include "ssmc/recurrence.hpp"

namespace ssmc {

// Certificate that WSM holds for T_M at the given activity: an invariant
// cuboid C(x_L, x_R) all orbits enter, plus a Collatz-Wielandt witness that
// F contracts there. Every field is re-checkable in exact arithmetic.
struct WsmHoldsCert {
    std::string matrix_id;
    Rat lambda;
    int scale = 7;
    long pairs = 0;          // rounded-composition pairs actually run from 0
    GridVector x_left, x_right;
    std::vector<Rat> test_vector;
    Rat bound;               // lambda * max_i (M(x_R)v)_i / v_i, certified < 1
};

// Certificate that WSM fails: two disjoint cuboids swapped by F, giving two
// distinct fixed points of F^2 through the Brouwer argument.
struct WsmFailsCert {
    std::string matrix_id;
    Rat lambda;
    int scale = 7;
    Cuboid left, right;
};

// A failed attempt carries the first failed check; it is explicitly not
// evidence in either direction.
struct CertifyFailure {
    std::string failed_check;
};

using WsmCertifyResult = std::variant<WsmHoldsCert, CertifyFailure>;
using WsmRefuteResult = std::variant<WsmFailsCert, CertifyFailure>;

struct WsmOptions {
    long pairs = 1000;      // minimum rounded-composition pairs
    long pair_cap = 200000; // stabilization cap
    int scale = 7;
};

// Computes x_L as the attracting fixed point of F_down.F_up from 0 (at least
// opts.pairs compositions), x_R = F_up(x_L), verifies the exact chain
// x_L <= F(x_R), F(x_L) <= x_R, and certifies contraction on C(x_L,x_R) via
// the Jacobian majorant at x_R.
WsmCertifyResult wsm_certify(const BranchingMatrix& core, const Activity& lambda,
                             const WsmOptions& opts = {});

struct RefuteOptions {
    long seed_pairs = 10000;   // alternating pairs before reading off seeds
    long seed_cap = 200000;
    int slack_units = 10;      // outward inflation per box-iteration round
    int max_rounds = 400;
    int scale = 7;
};

// Auto-seeded refutation: long alternating iteration provides period-2 seeds;
// a self-consistent box iteration grows cuboids until F swaps them strictly.
WsmRefuteResult wsm_refute(const BranchingMatrix& core, const Activity& lambda,
                           const RefuteOptions& opts = {});

// Refutation from explicit seeds inflated by a fixed number of grid units.
WsmRefuteResult wsm_refute_seeds(const BranchingMatrix& core, const Activity& lambda,
                                 const GridVector& seed_left, const GridVector& seed_right,
                                 int slack_units);

// Exact verification of the four strict chain inequalities on given cuboids:
//   x_LL < Fdown(x_RR) < Fup(x_RL) < x_LR,  x_RL < Fdown(x_LR) < Fup(x_LL) < x_RR
// plus disjointness. This is the sole trusted path for a WSM-fails claim.
WsmRefuteResult wsm_refute_cuboids(const BranchingMatrix& core, const Activity& lambda,
                                   const Cuboid& left, const Cuboid& right);

// Independent re-checks of stored certificates (exact arithmetic only).
// Returns the first failed check, or nullopt when the certificate is valid.
std::optional<std::string> recheck_wsm_holds(const BranchingMatrix& core, const WsmHoldsCert& c);
std::optional<std::string> recheck_wsm_fails(const BranchingMatrix& core, const WsmFailsCert& c);

struct ThresholdEstimate {
    Rat lower;        // largest activity with a holds-certificate (or interval start)
    Rat upper;        // smallest activity with a fails-certificate (or interval end)
    bool widened = false;  // true when undecided probes stopped the bisection early
};

struct ThresholdOptions {
    WsmOptions certify;
    RefuteOptions refute;
};

// Bisection with honest handling of undecided probes. The result is an
// estimate, not a certified threshold.
ThresholdEstimate threshold_estimate(const BranchingMatrix& core, const Rat& lambda_lo,
                                     const Rat& lambda_hi, const Rat& tol,
                                     const ThresholdOptions& opts = {});

std::string matrix_content_id(const BranchingMatrix& m);

}  // namespace ssmc
