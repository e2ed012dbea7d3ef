#include "waveray/oracle.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "waveray/errors.hpp"

namespace waveray {

namespace {

void fft_inplace(std::vector<std::complex<double>>& data, int sign) {
    fftw_complex* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(data.size()), p, p, sign, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

// Fritsch-Carlson slopes for a monotonicity-preserving piecewise cubic.
std::vector<double> pchip_slopes(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    std::vector<double> d(n, 0.0);
    if (n < 2)
        return d;
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        delta[i] = (y[i + 1] - y[i]) / h[i];
    }
    if (n == 2) {
        d[0] = d[1] = delta[0];
        return d;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    auto edge = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0)
            s = 0.0;
        else if (d0 * d1 < 0.0 && std::abs(s) > 3.0 * std::abs(d0))
            s = 3.0 * d0;
        return s;
    };
    d[0] = edge(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = edge(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    return d;
}

}  // namespace

ComplexProfile launch_field(const Profile& profile, double extent_half, std::size_t n) {
    if (!(extent_half > 0.0) || n < 2)
        throw ValidationError("launch_field: bad grid");
    ComplexProfile p;
    p.grid.n = n;
    p.grid.dx = 2.0 * extent_half / static_cast<double>(n);
    p.grid.x0 = -extent_half;
    p.u.resize(n);
    double peak = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        peak = std::max(peak, profile_value(profile, p.grid.x(k)));
    if (!(peak > 0.0))
        throw ValidationError("launch_field: profile vanishes on the grid");
    for (std::size_t k = 0; k < n; ++k)
        p.u[k] = profile_value(profile, p.grid.x(k)) / peak;
    return p;
}

ComplexProfile angular_spectrum_propagate(const ComplexProfile& profile, double z,
                                          const Units& units) {
    if (z < 0.0)
        throw ValidationError("angular_spectrum_propagate: z must be >= 0");
    if (!(profile.grid.dx > 0.0) || profile.grid.n != profile.u.size())
        throw ValidationError("angular_spectrum_propagate: malformed grid");
    if (profile.grid.dx > 1.0 / 16.0)
        throw GridResolutionError("angular_spectrum_propagate: grid coarser than 16 points per w0");

    const std::size_t n = profile.grid.n;
    const double k0 = 2.0 * std::numbers::pi / units.epsilon;
    const double dkappa = 2.0 * std::numbers::pi / (profile.grid.dx * static_cast<double>(n));

    ComplexProfile out = profile;
    fft_inplace(out.u, FFTW_FORWARD);
    for (std::size_t m = 0; m < n; ++m) {
        const double idx = (m <= n / 2 - 1) ? static_cast<double>(m)
                                            : static_cast<double>(m) - static_cast<double>(n);
        const double kappa = idx * dkappa;
        std::complex<double> mult;
        if (std::abs(kappa) <= k0) {
            // kz - k0 written cancellation-free: -kappa^2 / (kz + k0)
            const double kz = std::sqrt((k0 - kappa) * (k0 + kappa));
            const double dphase = -kappa * kappa / (kz + k0) * z;
            mult = std::polar(1.0, dphase);
        } else {
            const double decay = std::sqrt((kappa - k0) * (kappa + k0));
            mult = std::exp(std::complex<double>(-decay * z, 0.0)) * std::polar(1.0, -k0 * z);
        }
        out.u[m] *= mult;
    }
    fft_inplace(out.u, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : out.u)
        v *= scale;
    return out;
}

double profile_power(const ComplexProfile& profile) {
    double s = 0.0;
    for (const auto& v : profile.u)
        s += std::norm(v);
    return s * profile.grid.dx;
}

std::vector<double> ray_intensity_on_grid(const Frame& frame, const GridSpec& grid) {
    const int n = frame.n_rays();
    if (n < 2)
        throw ValidationError("ray_intensity_on_grid: need at least 2 rays");
    std::vector<double> xs(n), ys(n);
    for (int j = 0; j < n; ++j) {
        xs[j] = frame.x[j];
        ys[j] = frame.amplitude[j] * frame.amplitude[j];
        if (j > 0 && !(xs[j] > xs[j - 1]))
            throw ValidationError("ray_intensity_on_grid: rays not ordered in x");
    }
    const std::vector<double> d = pchip_slopes(xs, ys);

    std::vector<double> out(grid.n, 0.0);
    std::size_t seg = 0;
    for (std::size_t k = 0; k < grid.n; ++k) {
        const double x = grid.x(k);
        if (x < xs.front() || x > xs.back())
            continue;  // zero outside the bundle support
        while (seg + 2 < static_cast<std::size_t>(n) && x > xs[seg + 1])
            ++seg;
        const double h = xs[seg + 1] - xs[seg];
        const double t = (x - xs[seg]) / h;
        const double t2 = t * t, t3 = t2 * t;
        const double h00 = 2 * t3 - 3 * t2 + 1;
        const double h10 = t3 - 2 * t2 + t;
        const double h01 = -2 * t3 + 3 * t2;
        const double h11 = t3 - t2;
        out[k] = h00 * ys[seg] + h10 * h * d[seg] + h01 * ys[seg + 1] + h11 * h * d[seg + 1];
    }
    return out;
}

double l2_relative_error(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw ValidationError("l2_relative_error: size mismatch");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += (a[i] - b[i]) * (a[i] - b[i]);
        den += b[i] * b[i];
    }
    if (!(den > 0.0))
        throw ValidationError("l2_relative_error: zero-norm reference");
    return std::sqrt(num / den);
}

int count_lobes(std::span<const double> intensity, double rel_threshold) {
    if (intensity.empty())
        return 0;
    const double peak = *std::max_element(intensity.begin(), intensity.end());
    const double thr = rel_threshold * peak;
    int lobes = 0;
    for (std::size_t i = 1; i + 1 < intensity.size(); ++i)
        if (intensity[i] > thr && intensity[i] > intensity[i - 1] &&
            intensity[i] >= intensity[i + 1])
            ++lobes;
    return lobes;
}

}  // namespace waveray

namespace waveray {

OracleComparison compare_frame_with_oracle(const Frame& frame, const ScenarioConfig& config,
                                           double extent_half, std::size_t grid_n) {
    if (!is_free_field(config.field))
        throw ValidationError("compare_frame_with_oracle: oracle covers free space only");
    const int center = frame.n_rays() / 2;

    OracleComparison cmp;
    cmp.z = frame.z[center];

    const ComplexProfile u0 = launch_field(config.profile, extent_half, grid_n);
    const ComplexProfile uz = angular_spectrum_propagate(u0, cmp.z, config.units);
    std::vector<double> wave(grid_n);
    for (std::size_t k = 0; k < grid_n; ++k)
        wave[k] = std::norm(uz.u[k]);

    const std::vector<double> rays = ray_intensity_on_grid(frame, uz.grid);
    cmp.l2 = l2_relative_error(rays, wave);
    cmp.ray_lobes = count_lobes(rays, 0.05);
    cmp.oracle_lobes = count_lobes(wave, 0.05);
    return cmp;
}

}  // namespace waveray
