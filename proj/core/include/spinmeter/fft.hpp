#ifndef SPINMETER_FFT_HPP
#define SPINMETER_FFT_HPP

#include <cstddef>
#include <vector>

#include "spinmeter/pauli.hpp"

namespace spinmeter::fft {

/// In-place unnormalized forward DFT (e^{-ikx} convention) of a length-n
/// complex array.
void forward1d(std::vector<cx>& a);

/// In-place inverse DFT including the 1/n normalization.
void inverse1d(std::vector<cx>& a);

/// In-place 2D transforms of an n x n row-major array.
void forward2d(std::vector<cx>& a, std::size_t n);
void inverse2d(std::vector<cx>& a, std::size_t n);

/// Transform only along one axis of an n x n array (axis 0 = rows index,
/// i.e. the first coordinate). Inverse includes the 1/n normalization.
void forwardAxis(std::vector<cx>& a, std::size_t n, int axis);
void inverseAxis(std::vector<cx>& a, std::size_t n, int axis);

}  // namespace spinmeter::fft

#endif
