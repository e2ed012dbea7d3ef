#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "waveray/fields.hpp"

namespace waveray {

// Dimensionless unit scheme. Lengths are in units of the launch half-width
// w0, momenta in p0 = sqrt(2mE), energies in E, time in m*w0/p0. The single
// physics parameter is epsilon = lambda0 / w0.
struct Units {
    double epsilon = 1.652e-4;

    double hbar_scaled() const { return epsilon / (2.0 * std::numbers::pi); }
    double rayleigh_z() const { return std::numbers::pi / epsilon; }

    friend bool operator==(const Units&, const Units&) = default;
};

// Throws ValidationError on non-positive lengths.
Units make_units(double lambda0, double w0);

// One ray of the bundle at a time step.
struct RayState {
    double x = 0.0;
    double z = 0.0;
    double px = 0.0;
    double pz = 1.0;
    double amplitude = 0.0;  // R >= 0
    double q_value = 0.0;    // Q/E
};

// Ordered set of rays on a common wavefront, plus the per-tube fluxes
// R^2 |p| w conserved for the lifetime of a run (one flux per pair of
// adjacent rays).
struct Bundle {
    std::vector<RayState> rays;
    std::vector<double> tube_flux;  // size rays.size() - 1
    double time = 0.0;

    int n_rays() const { return static_cast<int>(rays.size()); }
};

struct GaussianProfile {
    friend bool operator==(const GaussianProfile&, const GaussianProfile&) = default;
};

// Two coherent Gaussians centered at +-offset.
struct TwoGaussianProfile {
    double offset = 1.4;

    friend bool operator==(const TwoGaussianProfile&, const TwoGaussianProfile&) = default;
};

using Profile = std::variant<GaussianProfile, TwoGaussianProfile>;

double profile_value(const Profile& profile, double x);
std::string profile_type_name(const Profile& profile);

enum class Mode { exact, eikonal };

struct ScenarioConfig {
    Units units{};
    int n_rays = 201;
    double span = 4.0;  // launch half-extent in w0
    Profile profile{};
    FieldSpec field{};
    Mode mode = Mode::exact;
    double dt = 0.5;
    std::optional<double> t_max;
    std::optional<double> z_max;  // central ray leaving [0, z_max] stops the run
    int record_every = 100;
    int smoothing = 5;  // odd window for the local quadratic fit
    double caustic_min_spacing = 1e-4;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

// Throws ValidationError naming the offending key.
void validate_config(const ScenarioConfig& config);

// Recorded snapshot of the whole bundle.
struct Frame {
    double time = 0.0;
    std::vector<double> x, z, px, pz, amplitude, q_value;
    std::vector<double> e_mech;  // px^2 + pz^2 + V(x, z) per ray
    double half_width = 0.0;     // rms transverse half-width

    int n_rays() const { return static_cast<int>(x.size()); }
};

Frame make_frame(const Bundle& bundle, const FieldSpec& field);

// Amplitude-weighted rms half-width: sqrt(sum R_j^2 wbar_j x_j^2 /
// sum R_j^2 wbar_j) with per-ray quadrature weights wbar_j from adjacent
// ray spacings (one-sided at the edges).
double rms_half_width(const Frame& frame);

// N rays at z = 0, uniformly spaced on [-span, span], px = 0, pz = 1,
// amplitudes from the profile peak-normalized to 1, tube fluxes from
// adjacent-ray midpoint values.
Bundle build_bundle(const ScenarioConfig& config);

}  // namespace waveray
