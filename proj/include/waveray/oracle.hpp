#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "waveray/core.hpp"

namespace waveray {

// Uniform transverse grid, coordinates in w0.
struct GridSpec {
    double x0 = 0.0;  // coordinate of sample 0
    double dx = 0.0;
    std::size_t n = 0;

    double x(std::size_t k) const { return x0 + static_cast<double>(k) * dx; }
};

// Complex field samples on a uniform grid.
struct ComplexProfile {
    GridSpec grid;
    std::vector<std::complex<double>> u;
};

// Symmetric grid [-extent_half, extent_half) with n samples (n a power of
// two by convention), filled with the launch amplitude profile.
ComplexProfile launch_field(const Profile& profile, double extent_half, std::size_t n);

// Exact free-space Helmholtz propagation by angular spectrum, co-moving
// convention: each transverse mode kappa advances by
// exp(i z (sqrt(k0^2 - kappa^2) - k0)), k0 = 2 pi / epsilon; evanescent
// modes decay. Throws GridResolutionError if the grid has fewer than 16
// points per w0, ValidationError for z < 0.
ComplexProfile angular_spectrum_propagate(const ComplexProfile& profile, double z,
                                          const Units& units);

// Total power sum |u|^2 dx.
double profile_power(const ComplexProfile& profile);

// R^2 of the frame's rays interpolated onto the grid with a monotone
// piecewise cubic (zero outside the bundle support).
std::vector<double> ray_intensity_on_grid(const Frame& frame, const GridSpec& grid);

// ||a - b||_2 / ||b||_2; throws ValidationError on a zero-norm reference.
double l2_relative_error(std::span<const double> a, std::span<const double> b);

// Number of local maxima above rel_threshold * max(intensity).
int count_lobes(std::span<const double> intensity, double rel_threshold);

// Ray-bundle intensity of one frame against the full-wave oracle
// propagated to the frame's central-ray z (free space only).
struct OracleComparison {
    double z = 0.0;
    double l2 = 0.0;
    int ray_lobes = 0;
    int oracle_lobes = 0;
};

OracleComparison compare_frame_with_oracle(const Frame& frame, const ScenarioConfig& config,
                                           double extent_half = 32.0, std::size_t grid_n = 1024);

}  // namespace waveray
