#include "spinmeter/spin_state.hpp"

#include <cmath>

namespace spinmeter {

Vec2 SpinState::spinor() const {
    const double c = std::cos(beta / 2.0);
    const double s = std::sin(beta / 2.0);
    return {c * std::exp(kI * phi), cx(s, 0.0)};
}

std::array<double, 3> SpinState::bloch() const {
    const Vec2 xi = spinor();
    const cx r12 = xi.a * std::conj(xi.b);
    return {2.0 * r12.real(), -2.0 * r12.imag(), std::norm(xi.a) - std::norm(xi.b)};
}

}  // namespace spinmeter
