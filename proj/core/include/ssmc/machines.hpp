#pragma once

#include <string>

#include "ssmc/branching_matrix.hpp"

namespace ssmc {

// Finite-state machines transcribed from the never-go-South family:
//   D_H     never-go-South tree, states O,N,E,W
//   D_G     ordering-independent subtree, remembers the last two steps
//   D_prime 17-state machine allowing guarded South moves
BranchingMatrix build_named_machine(const std::string& name);

}  // namespace ssmc
