#pragma once

#include <cstddef>

namespace dde {

/// Model constants of the two-delay equation
///   du/dt = -gamma*u + f(u(t-tau0)) - f(u(t-tau)) * exp(-gamma*(tau-tau0)).
struct Parameters {
    double gamma = 0.005;  // clearance rate, 1/time
    double tau0 = 0.1;     // maturation delay
    double tau = 1.0;      // total delay (maturation + survival)

    double tau1() const { return tau - tau0; }

    // Throws GridError if gamma <= 0 or the delays are not ordered 0 < tau0 < tau.
    void validate() const;
};

/// Uniform grid commensurate with both delays: tau0/h and tau/h are integers,
/// so every delayed lookup lands exactly on a node.
struct Grid {
    double h = 0.0;
    int m0 = 0;  // tau0 / h
    int m1 = 0;  // (tau - tau0) / h
    int m = 0;   // tau / h

    // Throws GridError if h does not divide both tau0 and tau (to 1e-9 relative).
    static Grid make(const Parameters& p, double h);
};

// Largest commensurate step <= h_max for the given delays.
// Throws GridError if no such step exists with at most `max_nodes` nodes per tau0.
Grid finest_commensurate_grid(const Parameters& p, double h_max, int max_nodes = 100000);

}  // namespace dde
