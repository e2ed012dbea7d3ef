#include "waveray/integrator.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "waveray/errors.hpp"
#include "waveray/fields.hpp"
#include "waveray/wavefront.hpp"

namespace waveray {

namespace {

constexpr double kTransversalityFloor = 1e-300;
constexpr long kMaxSteps = 100'000'000;

// Acceleration dp/dt = -1/2 grad(V + Q) per ray. Returns the pipeline's
// transported amplitudes and Q for reuse; tracks the transversality audit.
struct StageEval {
    std::vector<Vec2> accel;
    std::vector<double> amplitudes;
    std::vector<double> q_values;
};

void evaluate_stage(const Bundle& bundle, const ScenarioConfig& config, StageEval& out,
                    double* max_transversality) {
    const int n = bundle.n_rays();
    out.accel.resize(n);
    if (config.mode == Mode::exact) {
        const WavefrontGeometry geom = wavefront_geometry(bundle, config.caustic_min_spacing);
        out.amplitudes = transport_amplitudes(bundle, geom);
        out.q_values =
            wave_potential(bundle, geom, out.amplitudes, config.units, config.smoothing);
        const std::vector<Vec2> gq =
            wave_potential_gradient(bundle, geom, out.q_values, config.smoothing);
        for (int j = 0; j < n; ++j) {
            const RayState& r = bundle.rays[j];
            const Vec2 gv = field_gradient(config.field, r.x, r.z);
            out.accel[j] = -0.5 * (gv + gq[j]);
            if (max_transversality) {
                const Vec2 p{r.px, r.pz};
                const double t = std::abs(dot(p, gq[j])) /
                                 (norm(p) * norm(gq[j]) + kTransversalityFloor);
                *max_transversality = std::max(*max_transversality, t);
            }
        }
    } else {
        for (int j = 0; j < n; ++j) {
            const RayState& r = bundle.rays[j];
            out.accel[j] = -0.5 * field_gradient(config.field, r.x, r.z);
        }
    }
}

Bundle step_rk4_impl(const Bundle& bundle, const ScenarioConfig& config,
                     double* max_transversality) {
    const int n = bundle.n_rays();
    const double dt = config.dt;

    StageEval ev;
    Bundle stage = bundle;

    std::vector<Vec2> kr(n), kp(n);        // accumulated RK4 combination
    std::vector<Vec2> kr_s(n), kp_s(n);    // current stage derivatives

    // stage 1
    evaluate_stage(bundle, config, ev, max_transversality);
    for (int j = 0; j < n; ++j) {
        kr_s[j] = {bundle.rays[j].px, bundle.rays[j].pz};
        kp_s[j] = ev.accel[j];
        kr[j] = kr_s[j];
        kp[j] = kp_s[j];
    }

    const double stage_c[3] = {0.5, 0.5, 1.0};
    const double weight[3] = {2.0, 2.0, 1.0};
    for (int s = 0; s < 3; ++s) {
        for (int j = 0; j < n; ++j) {
            RayState& r = stage.rays[j];
            const RayState& r0 = bundle.rays[j];
            r.x = r0.x + stage_c[s] * dt * kr_s[j].x;
            r.z = r0.z + stage_c[s] * dt * kr_s[j].z;
            r.px = r0.px + stage_c[s] * dt * kp_s[j].x;
            r.pz = r0.pz + stage_c[s] * dt * kp_s[j].z;
        }
        stage.time = bundle.time + stage_c[s] * dt;
        evaluate_stage(stage, config, ev, max_transversality);
        for (int j = 0; j < n; ++j) {
            kr_s[j] = {stage.rays[j].px, stage.rays[j].pz};
            kp_s[j] = ev.accel[j];
            kr[j] += weight[s] * kr_s[j];
            kp[j] += weight[s] * kp_s[j];
        }
    }

    Bundle next = bundle;
    const double c = dt / 6.0;
    for (int j = 0; j < n; ++j) {
        RayState& r = next.rays[j];
        r.x += c * kr[j].x;
        r.z += c * kr[j].z;
        r.px += c * kp[j].x;
        r.pz += c * kp[j].z;
    }
    next.time = bundle.time + dt;

    if (config.mode == Mode::exact) {
        const WavefrontGeometry geom = wavefront_geometry(next, config.caustic_min_spacing);
        const std::vector<double> amps = transport_amplitudes(next, geom);
        const std::vector<double> q =
            wave_potential(next, geom, amps, config.units, config.smoothing);
        for (int j = 0; j < n; ++j) {
            next.rays[j].amplitude = amps[j];
            next.rays[j].q_value = q[j];
        }
    }
    return next;
}

double min_spacing(const Bundle& bundle) {
    double m = std::numeric_limits<double>::infinity();
    for (int j = 0; j + 1 < bundle.n_rays(); ++j) {
        const RayState& a = bundle.rays[j];
        const RayState& b = bundle.rays[j + 1];
        const double dx = b.x - a.x;
        const double dz = b.z - a.z;
        m = std::min(m, std::sqrt(dx * dx + dz * dz));
    }
    return m;
}

}  // namespace

std::vector<Vec2> force(const Bundle& bundle, const ScenarioConfig& config) {
    const int n = bundle.n_rays();
    StageEval ev;
    evaluate_stage(bundle, config, ev, nullptr);
    std::vector<Vec2> f(n);
    for (int j = 0; j < n; ++j)
        f[j] = 2.0 * ev.accel[j];  // accel = -1/2 grad(V+Q)
    return f;
}

Bundle step_rk4(const Bundle& bundle, const ScenarioConfig& config) {
    if (!(config.dt > 0.0))
        throw ValidationError("dt: must be > 0");
    return step_rk4_impl(bundle, config, nullptr);
}

RunResult run(const ScenarioConfig& config) {
    validate_config(config);
    Bundle bundle = build_bundle(config);
    const std::vector<double> flux_at_launch = bundle.tube_flux;

    RunResult result;
    result.frames.push_back(make_frame(bundle, config.field));
    const std::vector<double> e_ref = result.frames.front().e_mech;

    StepReport& rep = result.report;
    rep.min_tube_width = min_spacing(bundle);

    long steps = 0;
    long last_recorded = 0;
    const double t_eps = 1e-9 * config.dt;
    const int center = config.n_rays / 2;

    while (steps < kMaxSteps) {
        if (config.t_max && bundle.time + config.dt > *config.t_max + t_eps)
            break;
        try {
            bundle = step_rk4_impl(bundle, config, &rep.max_transversality);
        } catch (const CausticError& e) {
            result.caustic_abort = true;
            result.caustic_tube = e.tube_index;
            result.abort_message = e.what();
            break;
        }
        ++steps;

        for (int j = 0; j < bundle.n_rays(); ++j) {
            const RayState& r = bundle.rays[j];
            const double e = r.px * r.px + r.pz * r.pz + field_value(config.field, r.x, r.z);
            rep.max_energy_drift = std::max(rep.max_energy_drift, std::abs(e - e_ref[j]));
            rep.max_speed_deviation =
                std::max(rep.max_speed_deviation,
                         std::abs(std::sqrt(r.px * r.px + r.pz * r.pz) - 1.0));
        }
        rep.min_tube_width = std::min(rep.min_tube_width, min_spacing(bundle));

        if (steps % config.record_every == 0) {
            result.frames.push_back(make_frame(bundle, config.field));
            last_recorded = steps;
        }
        if (config.z_max) {
            const double zc = bundle.rays[center].z;
            if (zc < 0.0 || zc > *config.z_max)
                break;
        }
    }

    if (last_recorded != steps)
        result.frames.push_back(make_frame(bundle, config.field));
    rep.time = bundle.time;

    // tube fluxes are conserved quantities; nothing may have touched them
    assert(bundle.tube_flux == flux_at_launch);
    if (bundle.tube_flux != flux_at_launch)
        throw ValidationError("tube_flux mutated during run");

    return result;
}

}  // namespace waveray
