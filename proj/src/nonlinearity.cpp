#include "dde/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dde {

Nonlinearity Nonlinearity::hill(double alpha) {
    Nonlinearity nl;
    nl.kind = Kind::Hill;
    nl.alpha = alpha;
    nl.fbar = 4.0;  // maximum at u = 0
    nl.validate();
    return nl;
}

Nonlinearity Nonlinearity::arctan_sine(double alpha) {
    Nonlinearity nl;
    nl.kind = Kind::ArctanSine;
    nl.alpha = alpha;
    nl.fbar = 2.0;  // (2/pi)*(pi/2) + 1
    nl.validate();
    return nl;
}

Nonlinearity Nonlinearity::gaussian_bump(double amplitude, double phi0, double delta) {
    Nonlinearity nl;
    nl.kind = Kind::GaussianBump;
    nl.amplitude = amplitude;
    nl.phi0 = phi0;
    nl.delta = delta;
    nl.fbar = amplitude;
    nl.validate();
    return nl;
}

Nonlinearity Nonlinearity::zero() {
    Nonlinearity nl;
    nl.kind = Kind::Zero;
    nl.fbar = 0.0;
    return nl;
}

Nonlinearity Nonlinearity::constant(double amplitude) {
    Nonlinearity nl;
    nl.kind = Kind::Constant;
    nl.amplitude = amplitude;
    nl.fbar = amplitude;
    nl.validate();
    return nl;
}

Nonlinearity Nonlinearity::table(std::vector<double> u, std::vector<double> f) {
    Nonlinearity nl;
    nl.kind = Kind::Table;
    nl.table_u = std::move(u);
    nl.table_f = std::move(f);
    // Piecewise-linear interpolation cannot exceed the node values.
    nl.fbar = nl.table_f.empty() ? 0.0 : *std::max_element(nl.table_f.begin(), nl.table_f.end());
    nl.validate();
    return nl;
}

void Nonlinearity::validate() const {
    switch (kind) {
        case Kind::Hill:
        case Kind::ArctanSine:
            if (!std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite");
            break;
        case Kind::GaussianBump:
            if (!(amplitude >= 0.0) || !(delta > 0.0) || !std::isfinite(phi0))
                throw std::invalid_argument("gaussian bump needs amplitude >= 0, delta > 0");
            break;
        case Kind::Constant:
            if (!(amplitude >= 0.0)) throw std::invalid_argument("constant f must be >= 0");
            break;
        case Kind::Table: {
            if (table_u.size() != table_f.size() || table_u.size() < 2)
                throw std::invalid_argument("table needs >= 2 matching (u, f) pairs");
            for (std::size_t i = 0; i + 1 < table_u.size(); ++i)
                if (!(table_u[i] < table_u[i + 1]))
                    throw std::invalid_argument("table abscissae must be strictly increasing");
            for (double v : table_f)
                if (!(v >= 0.0) || !std::isfinite(v))
                    throw std::invalid_argument("table values must be finite and >= 0");
            break;
        }
        case Kind::Zero:
            break;
    }
}

double Nonlinearity::operator()(double u) const {
    if (u < 0.0) u = 0.0;
    switch (kind) {
        case Kind::Hill:
            return 4.0 / (1.0 + std::pow(u, alpha));
        case Kind::ArctanSine:
            return (2.0 / std::numbers::pi) * std::atan(alpha * std::sin(2.0 * std::numbers::pi * u)) + 1.0;
        case Kind::GaussianBump: {
            double d = u - phi0;
            return amplitude * std::exp(-d * d / delta);
        }
        case Kind::Zero:
            return 0.0;
        case Kind::Constant:
            return amplitude;
        case Kind::Table: {
            if (u <= table_u.front()) return table_f.front();
            if (u >= table_u.back()) return table_f.back();
            auto it = std::upper_bound(table_u.begin(), table_u.end(), u);
            std::size_t i = static_cast<std::size_t>(it - table_u.begin()) - 1;
            double w = (u - table_u[i]) / (table_u[i + 1] - table_u[i]);
            return table_f[i] + w * (table_f[i + 1] - table_f[i]);
        }
    }
    return 0.0;
}

std::string Nonlinearity::kind_name() const {
    switch (kind) {
        case Kind::Hill: return "hill";
        case Kind::ArctanSine: return "arctan-sine";
        case Kind::GaussianBump: return "gaussian-bump";
        case Kind::Zero: return "zero";
        case Kind::Constant: return "constant";
        case Kind::Table: return "table";
    }
    return "?";
}

double eval_f(const Nonlinearity& nl, double u) {
    if (!std::isfinite(u) || u < 0.0)
        throw std::domain_error("f evaluated at u = " + std::to_string(u) +
                                "; negative or non-finite concentration signals a positivity violation");
    return nl(u);
}

}  // namespace dde
