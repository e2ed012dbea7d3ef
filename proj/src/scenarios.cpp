#include "waveray/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "waveray/errors.hpp"

namespace waveray {

namespace {

constexpr double kNeutronEpsilon = 1.652e-4;  // cold-neutron beam, lambda0/w0
constexpr double kLensEpsilon = 1e-2;

ScenarioConfig base_config() {
    ScenarioConfig c;
    c.units = Units{kNeutronEpsilon};
    c.n_rays = 201;
    c.span = 4.0;
    c.profile = GaussianProfile{};
    c.field = FreeField{};
    c.mode = Mode::exact;
    c.dt = 0.5;
    c.record_every = 100;
    c.smoothing = 5;
    c.caustic_min_spacing = 1e-4;
    return c;
}

ScenarioConfig lens_config(Mode mode, int record_every) {
    ScenarioConfig c = base_config();
    c.units = Units{kLensEpsilon};
    // Calibrated so parallel eikonal rays focus near z = 2628, well past
    // the bump and inside the window; the exact-mode waist lands near 2900.
    c.field = LensField{800.0, 600.0, 2000.0};
    c.mode = mode;
    c.dt = 0.1;
    c.z_max = 3300.0;
    c.t_max = 6000.0;
    c.record_every = record_every;
    return c;
}

}  // namespace

std::string preset_name(PresetTag tag) {
    switch (tag) {
        case PresetTag::fig1_free_diffraction: return "fig1_free_diffraction";
        case PresetTag::fig2_two_gaussians: return "fig2_two_gaussians";
        case PresetTag::fig3_constant_force: return "fig3_constant_force";
        case PresetTag::fig5_barrier_below: return "fig5_barrier_below";
        case PresetTag::fig6_barrier_above: return "fig6_barrier_above";
        case PresetTag::fig7_barrier_high: return "fig7_barrier_high";
        case PresetTag::fig8_step_below: return "fig8_step_below";
        case PresetTag::fig9_step_above: return "fig9_step_above";
        case PresetTag::fig10_step_high: return "fig10_step_high";
        case PresetTag::fig11_lens_eikonal: return "fig11_lens_eikonal";
        case PresetTag::fig12_lens_exact: return "fig12_lens_exact";
        case PresetTag::fig13_lens_profiles: return "fig13_lens_profiles";
    }
    return "unknown";
}

std::optional<PresetTag> preset_from_name(const std::string& name) {
    for (PresetTag tag : kAllPresets)
        if (preset_name(tag) == name)
            return tag;
    return std::nullopt;
}

ScenarioConfig preset(PresetTag tag) {
    ScenarioConfig c = base_config();
    switch (tag) {
        case PresetTag::fig1_free_diffraction:
            c.z_max = 2.0 * c.units.rayleigh_z();
            c.t_max = 1.5 * *c.z_max;
            c.record_every = 500;
            break;
        case PresetTag::fig2_two_gaussians:
            c.profile = TwoGaussianProfile{1.4};
            c.z_max = 2.0 * c.units.rayleigh_z();
            c.t_max = 1.5 * *c.z_max;
            c.record_every = 500;
            break;
        case PresetTag::fig3_constant_force:
            c.field = ConstantForce{1e-4};
            c.z_max = 1.5e4;  // turning expected at z = 1/f = 1e4
            c.t_max = 6e4;    // ballistic rise + fall takes 4e4
            break;
        case PresetTag::fig5_barrier_below:
            c.field = GaussianBarrier{1.0 / 0.99, 1e4, 5e3};
            c.z_max = 2.5e4;
            c.t_max = 8e4;
            break;
        case PresetTag::fig6_barrier_above:
            c.field = GaussianBarrier{1.0 / 1.01, 1e4, 5e3};
            c.z_max = 2.1e4;
            c.t_max = 8e4;
            break;
        case PresetTag::fig7_barrier_high:
            c.field = GaussianBarrier{0.25, 1e4, 5e3};
            c.z_max = 2.1e4;
            c.t_max = 4e4;
            break;
        case PresetTag::fig8_step_below:
            c.field = LogisticStep{1.0 / 0.99, 0.002, 1e4};
            c.z_max = 2.0e4;
            c.t_max = 1e5;  // near-threshold dwell is slow
            break;
        case PresetTag::fig9_step_above:
            c.field = LogisticStep{1.0 / 1.01, 0.002, 1e4};
            c.z_max = 1.3e4;  // crawls past the flex at pz ~ 0.1
            c.t_max = 6e4;
            break;
        case PresetTag::fig10_step_high:
            c.field = LogisticStep{0.25, 0.002, 1e4};
            c.z_max = 2.0e4;
            c.t_max = 4e4;
            break;
        case PresetTag::fig11_lens_eikonal:
            return lens_config(Mode::eikonal, 50);
        case PresetTag::fig12_lens_exact:
            return lens_config(Mode::exact, 50);
        case PresetTag::fig13_lens_profiles:
            return lens_config(Mode::exact, 20);
    }
    return c;
}

std::string preset_summary(PresetTag tag) {
    const ScenarioConfig c = preset(tag);
    std::ostringstream os;
    os << preset_name(tag) << ": field=" << field_type_name(c.field)
       << " profile=" << profile_type_name(c.profile)
       << " mode=" << (c.mode == Mode::exact ? "exact" : "eikonal")
       << " epsilon=" << c.units.epsilon << " n_rays=" << c.n_rays << " span=" << c.span
       << " dt=" << c.dt;
    if (c.z_max)
        os << " z_max=" << *c.z_max;
    if (c.t_max)
        os << " t_max=" << *c.t_max;
    return os.str();
}

double analytic_waist(double z, const Units& units) {
    const double u = units.epsilon * z / std::numbers::pi;
    return std::sqrt(1.0 + u * u);
}

WaistTrace waist_trace(const std::vector<Frame>& frames) {
    if (frames.empty())
        throw ValidationError("waist_trace: no frames");
    const Frame& launch = frames.front();
    int jp = -1, jm = -1;
    for (int j = 0; j < launch.n_rays(); ++j) {
        if (std::abs(launch.x[j] - 1.0) < 1e-6) jp = j;
        if (std::abs(launch.x[j] + 1.0) < 1e-6) jm = j;
    }
    if (jp < 0 || jm < 0)
        throw ValidationError("waist_trace: no rays launched at x = +-1 on this grid");

    WaistTrace t;
    for (const Frame& f : frames) {
        t.time.push_back(f.time);
        t.z_plus.push_back(f.z[jp]);
        t.x_plus.push_back(f.x[jp]);
        t.z_minus.push_back(f.z[jm]);
        t.x_minus.push_back(f.x[jm]);
    }
    return t;
}

double turning_point(const std::vector<Frame>& frames) {
    if (frames.empty())
        throw ValidationError("turning_point: no frames");
    const int center = frames.front().n_rays() / 2;
    for (std::size_t k = 0; k + 1 < frames.size(); ++k) {
        const double a = frames[k].pz[center];
        const double b = frames[k + 1].pz[center];
        if (a == 0.0)
            return frames[k].z[center];
        if ((a > 0.0) != (b > 0.0)) {
            const double lam = a / (a - b);
            return frames[k].z[center] + lam * (frames[k + 1].z[center] - frames[k].z[center]);
        }
    }
    throw NoTurningError("turning_point: central ray pz never changed sign (transmitted)");
}

double beam_width(const Frame& frame) {
    return rms_half_width(frame);
}

FocalMetrics focal_metrics(const std::vector<Frame>& frames) {
    if (frames.empty())
        throw ValidationError("focal_metrics: no frames");
    const int center = frames.front().n_rays() / 2;

    std::size_t imin = 0;
    for (std::size_t k = 1; k < frames.size(); ++k)
        if (frames[k].half_width < frames[imin].half_width)
            imin = k;

    FocalMetrics m;
    m.argmin_frame = imin;
    m.z_at_min = frames[imin].z[center];
    m.min_width = frames[imin].half_width;
    m.boundary_inconclusive = (imin == 0 || imin + 1 == frames.size());

    for (double a : frames[imin].amplitude)
        m.peak_intensity = std::max(m.peak_intensity, a * a);

    if (!m.boundary_inconclusive) {
        // parabola through the three frames around the minimum
        const double z1 = frames[imin - 1].z[center], w1 = frames[imin - 1].half_width;
        const double z2 = frames[imin].z[center], w2 = frames[imin].half_width;
        const double z3 = frames[imin + 1].z[center], w3 = frames[imin + 1].half_width;
        const double da = z2 - z1, db = z2 - z3;
        const double num = da * da * (w2 - w3) - db * db * (w2 - w1);
        const double den = da * (w2 - w3) - db * (w2 - w1);
        if (den != 0.0) {
            const double zv = z2 - 0.5 * num / den;
            if (zv > std::min(z1, z3) && zv < std::max(z1, z3)) {
                // evaluate the Lagrange parabola at the vertex
                const double l1 = (zv - z2) * (zv - z3) / ((z1 - z2) * (z1 - z3));
                const double l2 = (zv - z1) * (zv - z3) / ((z2 - z1) * (z2 - z3));
                const double l3 = (zv - z1) * (zv - z2) / ((z3 - z1) * (z3 - z2));
                const double wv = w1 * l1 + w2 * l2 + w3 * l3;
                m.z_at_min = zv;
                m.min_width = std::clamp(wv, 0.0, w2);
            }
        }
    }
    return m;
}

}  // namespace waveray
