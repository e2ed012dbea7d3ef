#include "waveray/core.hpp"

#include <algorithm>
#include <cmath>

#include "waveray/errors.hpp"

namespace waveray {

Units make_units(double lambda0, double w0) {
    if (!(lambda0 > 0.0))
        throw ValidationError("make_units: lambda0 must be > 0");
    if (!(w0 > 0.0))
        throw ValidationError("make_units: w0 must be > 0");
    return Units{lambda0 / w0};
}

double profile_value(const Profile& profile, double x) {
    return std::visit(
        [x](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, GaussianProfile>) {
                return std::exp(-x * x);
            } else {
                static_assert(std::is_same_v<T, TwoGaussianProfile>);
                const double a = x - p.offset;
                const double b = x + p.offset;
                return std::exp(-a * a) + std::exp(-b * b);
            }
        },
        profile);
}

std::string profile_type_name(const Profile& profile) {
    return std::holds_alternative<GaussianProfile>(profile) ? "gaussian" : "two_gaussian";
}

void validate_config(const ScenarioConfig& config) {
    if (!(config.units.epsilon > 0.0))
        throw ValidationError("epsilon: must be > 0");
    if (config.n_rays < 5 || config.n_rays % 2 == 0)
        throw ValidationError("n_rays: must be odd and >= 5");
    if (!(config.span > 0.0))
        throw ValidationError("span: must be > 0");
    if (!(config.dt > 0.0))
        throw ValidationError("dt: must be > 0");
    if (config.smoothing < 3 || config.smoothing % 2 == 0)
        throw ValidationError("smoothing: window must be odd and >= 3");
    if (config.smoothing > config.n_rays)
        throw ValidationError("smoothing: window exceeds n_rays");
    if (config.record_every < 1)
        throw ValidationError("record_every: must be >= 1");
    if (!(config.caustic_min_spacing > 0.0))
        throw ValidationError("caustic_min_spacing: must be > 0");
    if (!config.t_max && !config.z_max)
        throw ValidationError("t_max/z_max: at least one stop condition required");
    if (config.t_max && !(*config.t_max >= 0.0))
        throw ValidationError("t_max: must be >= 0");
    if (config.z_max && !(*config.z_max > 0.0))
        throw ValidationError("z_max: must be > 0");
    validate_field(config.field);
    if (const auto* tg = std::get_if<TwoGaussianProfile>(&config.profile)) {
        if (!(tg->offset >= 0.0))
            throw ValidationError("profile.offset: must be >= 0");
    }
}

Frame make_frame(const Bundle& bundle, const FieldSpec& field) {
    const int n = bundle.n_rays();
    Frame f;
    f.time = bundle.time;
    f.x.resize(n);
    f.z.resize(n);
    f.px.resize(n);
    f.pz.resize(n);
    f.amplitude.resize(n);
    f.q_value.resize(n);
    f.e_mech.resize(n);
    for (int j = 0; j < n; ++j) {
        const RayState& r = bundle.rays[j];
        f.x[j] = r.x;
        f.z[j] = r.z;
        f.px[j] = r.px;
        f.pz[j] = r.pz;
        f.amplitude[j] = r.amplitude;
        f.q_value[j] = r.q_value;
        f.e_mech[j] = r.px * r.px + r.pz * r.pz + field_value(field, r.x, r.z);
    }
    f.half_width = rms_half_width(f);
    return f;
}

double rms_half_width(const Frame& frame) {
    const int n = frame.n_rays();
    if (n == 0)
        return 0.0;
    if (n == 1)
        return std::abs(frame.x[0]);
    double wsum = 0.0;
    double xsum = 0.0;
    for (int j = 0; j < n; ++j) {
        const int lo = std::max(j - 1, 0);
        const int hi = std::min(j + 1, n - 1);
        const double dx = frame.x[hi] - frame.x[lo];
        const double dz = frame.z[hi] - frame.z[lo];
        // half the chord through the neighbors; full chord at an edge ray
        const double wbar = std::sqrt(dx * dx + dz * dz) / (hi - lo);
        const double weight = frame.amplitude[j] * frame.amplitude[j] * wbar;
        wsum += weight;
        xsum += weight * frame.x[j] * frame.x[j];
    }
    return wsum > 0.0 ? std::sqrt(xsum / wsum) : 0.0;
}

Bundle build_bundle(const ScenarioConfig& config) {
    validate_config(config);
    const int n = config.n_rays;
    const double spacing = 2.0 * config.span / (n - 1);

    Bundle bundle;
    bundle.rays.resize(n);
    double peak = 0.0;
    for (int j = 0; j < n; ++j) {
        RayState& r = bundle.rays[j];
        r.x = -config.span + j * spacing;
        r.z = 0.0;
        r.px = 0.0;
        r.pz = 1.0;
        r.amplitude = profile_value(config.profile, r.x);
        peak = std::max(peak, r.amplitude);
    }
    if (!(peak > 0.0))
        throw ValidationError("profile: amplitude below floor everywhere on the launch grid");
    for (RayState& r : bundle.rays)
        r.amplitude /= peak;

    bundle.tube_flux.resize(n - 1);
    for (int j = 0; j + 1 < n; ++j) {
        const RayState& a = bundle.rays[j];
        const RayState& b = bundle.rays[j + 1];
        const double r_mid = 0.5 * (a.amplitude + b.amplitude);
        const double p_mid =
            0.5 * (std::sqrt(a.px * a.px + a.pz * a.pz) + std::sqrt(b.px * b.px + b.pz * b.pz));
        const double w = b.x - a.x;
        bundle.tube_flux[j] = r_mid * r_mid * p_mid * w;
    }
    return bundle;
}

}  // namespace waveray
