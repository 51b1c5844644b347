#include "spinmeter/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinmeter/errors.hpp"

namespace spinmeter {

namespace {

bool isPowerOfTwo(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t nextPowerOfTwo(double n) {
    std::size_t p = 64;
    while (static_cast<double>(p) < n) p <<= 1;
    return p;
}

// Packet width after free spreading for time t: w sqrt(1 + (v_sp t / w)^2).
double spreadWidth(const MeasurementSetup& s, double t) {
    const double r = s.v_sp * t / s.w;
    return s.w * std::sqrt(1.0 + r * r);
}

}  // namespace

Grid::Grid(int dim, double extent, std::size_t points)
    : dim_(dim), n_(points), extent_(extent), h_(extent / static_cast<double>(points)) {
    if (!isPowerOfTwo(points))
        throw ConfigError("grid points per axis must be a power of two, got " +
                          std::to_string(points));
    if (!(extent > 0.0)) throw ConfigError("grid extent must be positive");
}

Grid Grid::make1d(double extent, std::size_t points) { return Grid(1, extent, points); }

Grid Grid::make2d(double extent, std::size_t points) { return Grid(2, extent, points); }

Grid Grid::auto1d(const MeasurementSetup& s, double tMax) {
    const double wEff = spreadWidth(s, tMax);
    const double extent = 2.0 * (s.alpha * tMax + 8.0 * wEff) + 2.0 * s.w;
    const double kNeeded = 8.0 / s.w;
    // pi N / extent >= kNeeded, with a factor 2 of momentum headroom
    const std::size_t n = nextPowerOfTwo(2.0 * kNeeded * extent / std::numbers::pi);
    return Grid(1, extent, n);
}

Grid Grid::auto2d(const MeasurementSetup& s) {
    const double extent = 2.0 * (s.rSo() + 8.0 * spreadWidth(s, s.T)) + 2.0 * s.w;
    const double kNeeded = 8.0 / s.w;
    const std::size_t n = nextPowerOfTwo(1.5 * kNeeded * extent / std::numbers::pi);
    return Grid(2, extent, n);
}

double Grid::kMax() const { return std::numbers::pi * static_cast<double>(n_) / extent_; }

double Grid::coord(std::size_t i) const {
    return (static_cast<double>(i) - static_cast<double>(n_ / 2)) * h_;
}

double Grid::kValue(std::size_t i) const {
    const auto half = n_ / 2;
    const double idx = i < half ? static_cast<double>(i)
                                : static_cast<double>(i) - static_cast<double>(n_);
    return 2.0 * std::numbers::pi * idx / extent_;
}

void Grid::requireFitsPacket(const MeasurementSetup& s) const {
    if (extent_ < 8.0 * s.w)
        throw ConfigError("grid extent " + std::to_string(extent_) +
                          " too small for packet width w = " + std::to_string(s.w));
    if (kMax() < 8.0 / s.w)
        throw ConfigError("momentum cutoff " + std::to_string(kMax()) +
                          " below 8/w = " + std::to_string(8.0 / s.w));
}

void Grid::requireCovers1d(const MeasurementSetup& s, double t) const {
    requireFitsPacket(s);
    const double need =
        2.0 * (s.alpha * t + 8.0 * s.w) + s.w * std::max(1.0, s.v_sp * t / s.w);
    if (extent_ < need)
        throw ConfigError("grid extent " + std::to_string(extent_) +
                          " smaller than required " + std::to_string(need) +
                          " for evolution to t = " + std::to_string(t));
}

void Grid::requireCovers2d(const MeasurementSetup& s) const {
    requireFitsPacket(s);
    const double need = 2.0 * (s.rSo() + 8.0 * s.w);
    if (extent_ < need)
        throw ConfigError("grid extent " + std::to_string(extent_) +
                          " smaller than required " + std::to_string(need) +
                          " (allowed circle R_so plus Gaussian padding)");
}

}  // namespace spinmeter
