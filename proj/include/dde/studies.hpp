#pragma once

#include "dde/nonlinearity.hpp"
#include "dde/params.hpp"

namespace dde {

/// Self-convergence study at steps h, h/2, h/4 from a smooth compatible D0
/// initial condition (rebuilt per grid from the same analytic age profile).
struct ConvergenceStudy {
    double err_coarse_steps = 0.0;   // max |u_h - u_{h/2}| on shared nodes
    double err_fine_steps = 0.0;     // max |u_{h/2} - u_{h/4}|
    double order_steps = 0.0;        // log2 of the ratio
    double err_coarse_renewal = 0.0;
    double err_fine_renewal = 0.0;
    double order_renewal = 0.0;
};

ConvergenceStudy convergence_study(const Parameters& p, const Nonlinearity& nl,
                                   double h, double t_end);

}  // namespace dde
