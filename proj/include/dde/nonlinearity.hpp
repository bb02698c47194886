#pragma once

#include <string>
#include <vector>

namespace dde {

/// Feedback (production-rate) function f with a known upper bound fbar,
/// 0 <= f(u) <= fbar for all u >= 0.
struct Nonlinearity {
    enum class Kind { Hill, ArctanSine, GaussianBump, Zero, Constant, Table };

    Kind kind = Kind::Zero;
    double alpha = 1.0;      // shape exponent / steepness (Hill, ArctanSine)
    double amplitude = 0.0;  // A (GaussianBump, Constant)
    double phi0 = 0.0;       // bump center (GaussianBump)
    double delta = 1.0;      // bump width^2 (GaussianBump)
    std::vector<double> table_u;  // Table: abscissae, strictly increasing
    std::vector<double> table_f;  // Table: values, same length

    double fbar = 0.0;

    // Factories fill in fbar.
    static Nonlinearity hill(double alpha);                 // 4 / (1 + u^alpha)
    static Nonlinearity arctan_sine(double alpha);          // (2/pi) atan(alpha sin(2 pi u)) + 1
    static Nonlinearity gaussian_bump(double amplitude, double phi0, double delta);
    static Nonlinearity zero();
    static Nonlinearity constant(double amplitude);
    static Nonlinearity table(std::vector<double> u, std::vector<double> f);

    // Raw evaluation; assumes u is finite. Defined for all real u so that
    // integrators remain usable past a positivity violation (negative
    // arguments are clamped to zero before the formula is applied).
    double operator()(double u) const;

    std::string kind_name() const;
    void validate() const;
};

// Checked evaluation: throws std::domain_error for u < 0 or non-finite u,
// which signals a positivity violation upstream.
double eval_f(const Nonlinearity& nl, double u);

}  // namespace dde
