#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "waveray/errors.hpp"
#include "waveray/io.hpp"
#include "waveray/oracle.hpp"
#include "waveray/scenarios.hpp"

namespace waveray {

namespace {

std::string metric(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

// Max relative deviation of the +-1 ray traces from the paraxial waist law,
// over recorded frames with z inside [0, z_limit].
double max_waist_deviation(const std::vector<Frame>& frames, const Units& units,
                           double z_limit) {
    const WaistTrace trace = waist_trace(frames);
    double dev = 0.0;
    for (std::size_t k = 0; k < trace.time.size(); ++k) {
        if (trace.z_plus[k] <= z_limit) {
            const double w = analytic_waist(trace.z_plus[k], units);
            dev = std::max(dev, std::abs(std::abs(trace.x_plus[k]) - w) / w);
        }
        if (trace.z_minus[k] <= z_limit) {
            const double w = analytic_waist(trace.z_minus[k], units);
            dev = std::max(dev, std::abs(std::abs(trace.x_minus[k]) - w) / w);
        }
    }
    return dev;
}

CheckResult check_free_gaussian() {
    const ScenarioConfig config = preset(PresetTag::fig1_free_diffraction);
    const RunResult res = run(config);
    CheckResult out;
    if (res.caustic_abort) {
        out.line = "free-gaussian: FAIL (caustic abort: " + res.abort_message + ")";
        return out;
    }
    const double dev = max_waist_deviation(res.frames, config.units, 2.0 * config.units.rayleigh_z());

    // frame closest to one Rayleigh length for the full-wave comparison
    const int center = res.frames.front().n_rays() / 2;
    std::size_t pick = 0;
    for (std::size_t k = 0; k < res.frames.size(); ++k)
        if (std::abs(res.frames[k].z[center] - config.units.rayleigh_z()) <
            std::abs(res.frames[pick].z[center] - config.units.rayleigh_z()))
            pick = k;
    const OracleComparison cmp = compare_frame_with_oracle(res.frames[pick], config);

    out.pass = dev <= 0.01 && cmp.l2 <= 0.05;
    out.line = std::string("free-gaussian: ") + (out.pass ? "PASS" : "FAIL") +
               " max_waist_rel_dev=" + metric(dev) + " (tol 0.01)" +
               " oracle_l2@z=" + metric(cmp.z) + "=" + metric(cmp.l2) + " (tol 0.05)";
    return out;
}

CheckResult check_two_gaussian() {
    const ScenarioConfig config = preset(PresetTag::fig2_two_gaussians);
    const RunResult res = run(config);
    CheckResult out;
    if (res.caustic_abort) {
        out.line = "two-gaussian: FAIL (caustic abort: " + res.abort_message + ")";
        return out;
    }
    bool ordered = true;
    for (const Frame& f : res.frames)
        for (int j = 0; j + 1 < f.n_rays(); ++j)
            if (!(f.x[j] < f.x[j + 1]))
                ordered = false;
    const OracleComparison cmp = compare_frame_with_oracle(res.frames.back(), config);
    out.pass = ordered && cmp.ray_lobes == cmp.oracle_lobes && cmp.ray_lobes >= 2;
    out.line = std::string("two-gaussian: ") + (out.pass ? "PASS" : "FAIL") +
               " ordering_preserved=" + (ordered ? "yes" : "no") +
               " ray_lobes=" + std::to_string(cmp.ray_lobes) +
               " oracle_lobes=" + std::to_string(cmp.oracle_lobes) + " at z=" + metric(cmp.z);
    return out;
}

CheckResult check_gradient_fields() {
    std::mt19937 rng(20240811u);
    std::uniform_real_distribution<double> ux(-50.0, 50.0);
    std::uniform_real_distribution<double> uz(-1e3, 2.5e4);

    const std::vector<FieldSpec> specs = {
        FreeField{},
        ConstantForce{1e-4},
        GaussianBarrier{1.0 / 0.99, 1e4, 5e3},
        LogisticStep{1.0 / 0.99, 0.002, 1e4},
        LensField{800.0, 600.0, 2000.0},
    };
    const double h = 1e-6;
    double worst = 0.0;
    std::string worst_field = "none";
    for (const FieldSpec& spec : specs) {
        for (int i = 0; i < 200; ++i) {
            const double x = ux(rng);
            const double z = uz(rng);
            const Vec2 g = field_gradient(spec, x, z);
            const double fx =
                (field_value(spec, x + h, z) - field_value(spec, x - h, z)) / (2.0 * h);
            const double fz =
                (field_value(spec, x, z + h) - field_value(spec, x, z - h)) / (2.0 * h);
            const double ex = std::abs(g.x - fx) / std::max({std::abs(g.x), std::abs(fx), 1e-9});
            const double ez = std::abs(g.z - fz) / std::max({std::abs(g.z), std::abs(fz), 1e-9});
            const double e = std::max(ex, ez);
            if (e > worst) {
                worst = e;
                worst_field = field_type_name(spec);
            }
        }
    }
    CheckResult out;
    out.pass = worst <= 1e-5;
    out.line = std::string("gradient-fields: ") + (out.pass ? "PASS" : "FAIL") +
               " max_rel_dev=" + metric(worst) + " (tol 1e-5, worst=" + worst_field + ")";
    return out;
}

CheckResult check_energy_audit() {
    // free-space speed preservation on a truncated diffraction run
    ScenarioConfig free_cfg = preset(PresetTag::fig1_free_diffraction);
    free_cfg.t_max = 1e4;
    free_cfg.z_max.reset();
    const RunResult free_res = run(free_cfg);

    // mechanical-energy drift through a barrier (truncated near-threshold run)
    ScenarioConfig bar_cfg = preset(PresetTag::fig5_barrier_below);
    bar_cfg.t_max = 3e4;
    bar_cfg.z_max.reset();
    const RunResult bar_res = run(bar_cfg);

    CheckResult out;
    if (free_res.caustic_abort || bar_res.caustic_abort) {
        out.line = "energy-audit: FAIL (caustic abort)";
        return out;
    }
    out.pass = free_res.report.max_speed_deviation <= 1e-9 &&
               bar_res.report.max_energy_drift <= 1e-6;
    out.line = std::string("energy-audit: ") + (out.pass ? "PASS" : "FAIL") +
               " free_speed_dev=" + metric(free_res.report.max_speed_deviation) + " (tol 1e-9)" +
               " barrier_energy_drift=" + metric(bar_res.report.max_energy_drift) + " (tol 1e-6)";
    return out;
}

}  // namespace

std::vector<std::string> validation_check_names() {
    return {"free-gaussian", "two-gaussian", "gradient-fields", "energy-audit"};
}

CheckResult run_validation_check(const std::string& name) {
    if (name == "free-gaussian")
        return check_free_gaussian();
    if (name == "two-gaussian")
        return check_two_gaussian();
    if (name == "gradient-fields")
        return check_gradient_fields();
    if (name == "energy-audit")
        return check_energy_audit();
    throw ValidationError("unknown validation check '" + name + "'");
}

}  // namespace waveray
