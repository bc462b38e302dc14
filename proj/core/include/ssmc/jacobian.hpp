#pragma once

#include <string>
#include <vector>

#include "ssmc/branching_matrix.hpp"
#include "ssmc/rational.hpp"

namespace ssmc {

// Monomial c * prod_k x_k^{e_k} with non-negative integer data.
struct Monomial {
    long coeff = 0;
    std::vector<int> exps;

    Rat eval(const std::vector<Rat>& x) const;
    double eval_d(const std::vector<double>& x) const;
    std::string to_string() const;  // e.g. "2*x1^3*x2"
};

// Entry-wise majorant M(x) of |J_F(x)|/lambda: the derivative magnitude
// |dF_i/dx_j| = lambda * M_ij * x_j^{M_ij-1} * prod_{k!=j} x_k^{M_ik} * F_i^2
// with F_i replaced by the coordinate upper bound x_i. For every u <= y in a
// cuboid with F(lo) <= y, |J_F(u)| <= lambda * M(y) entry-wise.
struct JacobianMajorant {
    int t = 0;
    std::vector<std::vector<Monomial>> entries;  // zero coeff = structural zero

    std::vector<std::vector<Rat>> eval(const std::vector<Rat>& y) const;
    std::vector<std::vector<double>> eval_d(const std::vector<double>& y) const;
};

// Requires a matrix with transient types dropped.
JacobianMajorant jacobian_majorant(const BranchingMatrix& m);

// Exact Jacobian magnitude |J_F(x)|_ij at a rational point (not the majorant).
std::vector<std::vector<Rat>> jacobian_abs_exact(const BranchingMatrix& m, const Activity& lambda,
                                                 const std::vector<Rat>& x);

}  // namespace ssmc
