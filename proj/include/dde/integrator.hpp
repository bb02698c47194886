#pragma once

#include <vector>

#include "dde/kernel.hpp"
#include "dde/nonlinearity.hpp"
#include "dde/params.hpp"
#include "dde/segment.hpp"
#include "dde/trajectory.hpp"

namespace dde {

/// Method of steps: classical RK4 on the differential form
///   du/dt = -gamma u + f(u(t - tau0)) - f(u(t - tau)) exp(-gamma tau1)
/// with step h equal to the grid step. Delayed arguments at full steps land
/// on nodes; at RK4 half-steps they are evaluated by cubic Hermite
/// interpolation on stored (u, u') node data. The initial function need not
/// satisfy the equation at t = 0; the right-hand derivative is taken from
/// the equation there.
Trajectory integrate_steps(const HistorySegment& phi, const Parameters& p,
                           const Nonlinearity& nl, double t_end);

/// Renewal recursion: forward marching of
///   u(t) = exp(-gamma t) H0(phi) + int_{tau0}^{tau} f(u(t-a)) exp(-gamma (a-tau0)) da.
/// All lookups are at least tau0 in the past, so the march is explicit.
Trajectory integrate_renewal(const HistorySegment& phi, const Parameters& p,
                             const Nonlinearity& nl, double t_end);

/// One application of the segment map T: a tau-length advance of the renewal
/// recursion restricted to the segment window. (Tu)(-tau) = u(0) exactly.
HistorySegment apply_T(const HistorySegment& u, const Parameters& p,
                       const Nonlinearity& nl);

/// Iterates [T^1 u0, ..., T^n u0]; when 0 < n_keep < n only the last n_keep
/// segments are retained (ring buffer). Throws AdmissibilityError if u0 is
/// outside D, where positivity of the iterates is not guaranteed.
std::vector<HistorySegment> iterate_T(const HistorySegment& u0, int n,
                                      const Parameters& p, const Nonlinearity& nl,
                                      int n_keep = -1);

}  // namespace dde
