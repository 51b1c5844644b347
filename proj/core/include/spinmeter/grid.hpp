#ifndef SPINMETER_GRID_HPP
#define SPINMETER_GRID_HPP

#include <cstddef>

#include "spinmeter/setup.hpp"

namespace spinmeter {

/// Uniform periodic position grid in one or two dimensions, with the
/// conjugate momentum grid implied by the extent (spacing 2 pi / extent).
/// Points per axis must be a power of two. Coordinates are centered:
/// x_i = (i - n/2) h.
class Grid {
public:
    static Grid make1d(double extent, std::size_t points);
    static Grid make2d(double extent, std::size_t points);  // square

    /// Grid sized for a 1D evolution up to time tMax: extent covers the
    /// ballistic fronts, the Gaussian tails and (for v_sp > 0) the kinetic
    /// spreading; the momentum cutoff satisfies k_max >= 8/w.
    static Grid auto1d(const MeasurementSetup& s, double tMax);

    /// Grid sized for the 2D pulse of duration T (allowed circle of radius
    /// R_so plus Gaussian padding).
    static Grid auto2d(const MeasurementSetup& s);

    int dim() const { return dim_; }
    std::size_t points() const { return n_; }
    std::size_t size() const { return dim_ == 1 ? n_ : n_ * n_; }
    double extent() const { return extent_; }
    double spacing() const { return h_; }
    double cellVolume() const { return dim_ == 1 ? h_ : h_ * h_; }
    double kMax() const;

    /// Centered coordinate of index i along one axis.
    double coord(std::size_t i) const;

    /// Momentum of FFT bin i along one axis (FFT ordering).
    double kValue(std::size_t i) const;

    /// Flat index of the 2D point (i, j), row-major in the first axis.
    std::size_t flat(std::size_t i, std::size_t j) const { return i * n_ + j; }

    /// Validation for the 1D/2D evolution preconditions; throws ConfigError.
    void requireFitsPacket(const MeasurementSetup& s) const;       // k_max, 8w rules
    void requireCovers1d(const MeasurementSetup& s, double t) const;
    void requireCovers2d(const MeasurementSetup& s) const;

private:
    Grid(int dim, double extent, std::size_t points);

    int dim_ = 1;
    std::size_t n_ = 0;
    double extent_ = 0.0;
    double h_ = 0.0;
};

}  // namespace spinmeter

#endif
