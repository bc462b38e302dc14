#pragma once

#include "ssmc/quadratic.hpp"
#include "ssmc/rational.hpp"

namespace ssmc {

enum class RhoClass { below_1, equal_1, above_1 };

// Exact fixed point and Jacobian spectral-radius classification for the
// never-go-South recurrence (reduced 2x2 system), computed in Q(sqrt(8l+1)).
struct DhClosedForm {
    Rat lambda;
    QuadExt x0, y0;
    RhoClass classification;
};

DhClosedForm dh_closed_form(const Rat& lambda);  // requires lambda > 1

const char* rho_class_name(RhoClass c);

}  // namespace ssmc
