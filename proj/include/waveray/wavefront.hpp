#pragma once

#include <span>
#include <vector>

#include "waveray/core.hpp"
#include "waveray/vec2.hpp"

namespace waveray {

// Geometry of the common wavefront: the polyline through the ray positions.
struct WavefrontGeometry {
    std::vector<double> sigma;    // arclength coordinate per ray, sigma[0] = 0
    std::vector<double> width;    // per-tube spacing w_j = sigma[j+1] - sigma[j]
    std::vector<Vec2> tangent;    // per-ray unit tangent, perpendicular to p,
                                  // oriented along increasing sigma
};

// Builds sigma / widths / tangents from the current ray positions and
// momenta. Throws CausticError if any tube width is at or below
// caustic_min_spacing (adjacent rays about to cross).
WavefrontGeometry wavefront_geometry(const Bundle& bundle, double caustic_min_spacing);

// Flux-tube amplitude transport: tube-midpoint amplitudes from
// Rbar^2 |pbar| w = flux with current |pbar| and w, then per-ray values by
// averaging the two adjacent tubes (one-sided at the edge rays).
std::vector<double> transport_amplitudes(const Bundle& bundle, const WavefrontGeometry& geometry);

// Wave Potential per ray: Q = -(eps/2pi)^2 (d^2R/dsigma^2) / R, with the
// second derivative from a local least-squares quadratic fit of R(sigma)
// over `smoothing` points (window shifted to one side at the edges).
// Throws AmplitudeFloorError when R < 1e-12.
std::vector<double> wave_potential(const Bundle& bundle, const WavefrontGeometry& geometry,
                                   const std::vector<double>& amplitudes, const Units& units,
                                   int smoothing);

// grad Q per ray: (dQ/dsigma) * tangent, the same local-fit differentiation
// applied to Q(sigma). Exactly perpendicular to each ray's momentum by
// construction.
std::vector<Vec2> wave_potential_gradient(const Bundle& bundle, const WavefrontGeometry& geometry,
                                          const std::vector<double>& q_values, int smoothing);

// Local least-squares quadratic fit derivatives of y(s) at every sample:
// d1 = dy/ds, d2 = d2y/ds2. Window is odd, >= 3, <= n; windows are shifted
// inward at the boundaries so every fit uses `window` points. Exact for
// data that is quadratic over the window, on any spacing.
void local_quadratic_derivatives(std::span<const double> s, std::span<const double> y, int window,
                                 std::span<double> d1, std::span<double> d2);

constexpr double kAmplitudeFloor = 1e-12;

}  // namespace waveray
