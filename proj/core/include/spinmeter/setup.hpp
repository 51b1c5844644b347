#ifndef SPINMETER_SETUP_HPP
#define SPINMETER_SETUP_HPP

#include <array>

namespace spinmeter {

/// Physical parameters of one measurement run, in dimensionless units with
/// hbar = 1. The magnetic field direction is b = (sin(theta), 0, cos(theta)).
/// Finite pointer mass enters only through the spread speed v_sp = 1/(w M),
/// so 1/M = w * v_sp and v_sp = 0 encodes infinite mass.
struct MeasurementSetup {
    double alpha = 1.0;   ///< spin-orbit coupling speed
    double delta = 0.0;   ///< Zeeman splitting
    double theta = 0.0;   ///< field angle, in [0, pi]
    double w = 1.0;       ///< initial packet width
    double T = 1.0;       ///< measurement duration
    double v_sp = 0.0;    ///< packet spread speed 1/(w M)

    double alphaTilde() const;   ///< alpha / sqrt(2), the 2D Rashba speed
    double rSo() const;          ///< alphaTilde * T, the measurement radius
    double deltaTilde() const;   ///< delta * sin(theta)
    double gamma() const;        ///< delta * cos(theta) / alpha
    double invMass() const;      ///< 1/M = w * v_sp
    std::array<double, 3> fieldDirection() const;

    /// Throws ConfigError when any parameter is outside its validity range.
    void validate() const;
};

}  // namespace spinmeter

#endif
