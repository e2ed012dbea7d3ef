#include "waveray/wavefront.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "waveray/errors.hpp"

namespace waveray {

WavefrontGeometry wavefront_geometry(const Bundle& bundle, double caustic_min_spacing) {
    const int n = bundle.n_rays();
    WavefrontGeometry g;
    g.sigma.resize(n);
    g.width.resize(n - 1);
    g.tangent.resize(n);

    g.sigma[0] = 0.0;
    for (int j = 0; j + 1 < n; ++j) {
        const RayState& a = bundle.rays[j];
        const RayState& b = bundle.rays[j + 1];
        const double dx = b.x - a.x;
        const double dz = b.z - a.z;
        const double w = std::sqrt(dx * dx + dz * dz);
        if (w <= caustic_min_spacing)
            throw CausticError(j, bundle.time,
                               "caustic: tube " + std::to_string(j) + " width " +
                                   std::to_string(w) + " at t=" + std::to_string(bundle.time));
        g.width[j] = w;
        g.sigma[j + 1] = g.sigma[j] + w;
    }

    for (int j = 0; j < n; ++j) {
        const RayState& r = bundle.rays[j];
        const double p = std::sqrt(r.px * r.px + r.pz * r.pz);
        // chord through the neighbors fixes the orientation along the front
        const RayState& lo = bundle.rays[std::max(j - 1, 0)];
        const RayState& hi = bundle.rays[std::min(j + 1, n - 1)];
        const Vec2 chord{hi.x - lo.x, hi.z - lo.z};
        if (p < 1e-30) {
            const double c = norm(chord);
            g.tangent[j] = c > 0.0 ? Vec2{chord.x / c, chord.z / c} : Vec2{1.0, 0.0};
            continue;
        }
        Vec2 t{-r.pz / p, r.px / p};
        if (dot(t, chord) < 0.0)
            t *= -1.0;
        g.tangent[j] = t;
    }
    return g;
}

std::vector<double> transport_amplitudes(const Bundle& bundle, const WavefrontGeometry& geometry) {
    const int n = bundle.n_rays();
    std::vector<double> tube(n - 1);
    for (int j = 0; j + 1 < n; ++j) {
        const RayState& a = bundle.rays[j];
        const RayState& b = bundle.rays[j + 1];
        const double p_mid =
            0.5 * (std::sqrt(a.px * a.px + a.pz * a.pz) + std::sqrt(b.px * b.px + b.pz * b.pz));
        tube[j] = std::sqrt(bundle.tube_flux[j] / (p_mid * geometry.width[j]));
    }
    std::vector<double> amps(n);
    amps[0] = tube[0];
    amps[n - 1] = tube[n - 2];
    for (int j = 1; j + 1 < n; ++j)
        amps[j] = 0.5 * (tube[j - 1] + tube[j]);
    return amps;
}

void local_quadratic_derivatives(std::span<const double> s, std::span<const double> y, int window,
                                 std::span<double> d1, std::span<double> d2) {
    const int n = static_cast<int>(s.size());
    const int k = window / 2;
    for (int j = 0; j < n; ++j) {
        const int lo = std::clamp(j - k, 0, n - window);
        // scale offsets to tame the normal-equation conditioning
        double scale = 0.0;
        for (int i = lo; i < lo + window; ++i)
            scale = std::max(scale, std::abs(s[i] - s[j]));
        if (scale == 0.0)
            scale = 1.0;
        double m1 = 0, m2 = 0, m3 = 0, m4 = 0;
        double b0 = 0, b1 = 0, b2 = 0;
        for (int i = lo; i < lo + window; ++i) {
            const double v = (s[i] - s[j]) / scale;
            const double v2 = v * v;
            m1 += v;
            m2 += v2;
            m3 += v2 * v;
            m4 += v2 * v2;
            b0 += y[i];
            b1 += y[i] * v;
            b2 += y[i] * v2;
        }
        const double m0 = window;
        // solve the 3x3 symmetric normal equations by Cramer's rule
        const double det = m0 * (m2 * m4 - m3 * m3) - m1 * (m1 * m4 - m2 * m3) +
                           m2 * (m1 * m3 - m2 * m2);
        const double c1 = (m0 * (b1 * m4 - m3 * b2) - m1 * (b0 * m4 - m2 * b2) +
                           m2 * (b0 * m3 - m2 * b1)) /
                          det;
        const double c2 = (m0 * (m2 * b2 - b1 * m3) - m1 * (m1 * b2 - b0 * m3) +
                           m2 * (m1 * b1 - b0 * m2)) /
                          det;
        d1[j] = c1 / scale;
        d2[j] = 2.0 * c2 / (scale * scale);
    }
}

std::vector<double> wave_potential(const Bundle& bundle, const WavefrontGeometry& geometry,
                                   const std::vector<double>& amplitudes, const Units& units,
                                   int smoothing) {
    const int n = bundle.n_rays();
    std::vector<double> d1(n), d2(n);
    local_quadratic_derivatives(geometry.sigma, amplitudes, smoothing, d1, d2);
    const double h = units.hbar_scaled();
    const double coeff = -h * h;
    std::vector<double> q(n);
    for (int j = 0; j < n; ++j) {
        if (amplitudes[j] < kAmplitudeFloor)
            throw AmplitudeFloorError(j, amplitudes[j],
                                      "amplitude floor: ray " + std::to_string(j) +
                                          " R=" + std::to_string(amplitudes[j]) +
                                          " left the supported beam");
        q[j] = coeff * d2[j] / amplitudes[j];
    }
    return q;
}

std::vector<Vec2> wave_potential_gradient(const Bundle& bundle, const WavefrontGeometry& geometry,
                                          const std::vector<double>& q_values, int smoothing) {
    const int n = bundle.n_rays();
    std::vector<double> d1(n), d2(n);
    local_quadratic_derivatives(geometry.sigma, q_values, smoothing, d1, d2);
    std::vector<Vec2> grad(n);
    for (int j = 0; j < n; ++j)
        grad[j] = d1[j] * geometry.tangent[j];
    return grad;
}

}  // namespace waveray
