#include "spinmeter/setup.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinmeter/errors.hpp"

namespace spinmeter {

double MeasurementSetup::alphaTilde() const { return alpha / std::numbers::sqrt2; }

double MeasurementSetup::rSo() const { return alphaTilde() * T; }

double MeasurementSetup::deltaTilde() const { return delta * std::sin(theta); }

double MeasurementSetup::gamma() const { return delta * std::cos(theta) / alpha; }

double MeasurementSetup::invMass() const { return w * v_sp; }

std::array<double, 3> MeasurementSetup::fieldDirection() const {
    return {std::sin(theta), 0.0, std::cos(theta)};
}

void MeasurementSetup::validate() const {
    if (!(w > 0.0)) throw ConfigError("w must be positive");
    if (!(T >= 0.0)) throw ConfigError("T must be nonnegative");
    if (!(v_sp >= 0.0)) throw ConfigError("v_sp must be nonnegative");
    if (!(alpha >= 0.0)) throw ConfigError("alpha must be nonnegative");
    if (!(delta >= 0.0)) throw ConfigError("delta must be nonnegative");
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw ConfigError("theta must lie in [0, pi], got " + std::to_string(theta));
}

}  // namespace spinmeter
