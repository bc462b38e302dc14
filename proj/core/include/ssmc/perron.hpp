#pragma once

#include <vector>

#include "ssmc/rational.hpp"

namespace ssmc {

// Collatz-Wielandt upper bound: for non-negative A and strictly positive v,
// rho(A) <= max_i (Av)_i / v_i. Exact rational arithmetic.
Rat perron_bound(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& v);

// Heuristic witness vector: double-precision power iteration, a 1% upward
// margin on every coordinate, rationalized to at most 6 decimal digits. The
// result carries no claim; it is useful only if perron_bound certifies.
std::vector<Rat> find_test_vector(const std::vector<std::vector<Rat>>& a, int iterations = 2000);

}  // namespace ssmc
