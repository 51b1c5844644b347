#ifndef SPINMETER_SPIN_STATE_HPP
#define SPINMETER_SPIN_STATE_HPP

#include <array>

#include "spinmeter/pauli.hpp"

namespace spinmeter {

/// Initial spin state parameterized by polar angle beta and phase phi:
/// xi1 = cos(beta/2) e^{i phi}, xi2 = sin(beta/2).
/// Note the phase sits on the first component, so the Bloch vector is
/// (sin(beta)cos(phi), -sin(beta)sin(phi), cos(beta)).
struct SpinState {
    double beta = 0.0;
    double phi = 0.0;

    Vec2 spinor() const;

    /// Bloch vector (<sx>, <sy>, <sz>) of the spinor.
    std::array<double, 3> bloch() const;
};

}  // namespace spinmeter

#endif
