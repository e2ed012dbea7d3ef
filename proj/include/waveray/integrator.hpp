#pragma once

#include <limits>
#include <string>
#include <vector>

#include "waveray/core.hpp"
#include "waveray/vec2.hpp"

namespace waveray {

// Run-wide audit of the conserved quantities.
struct StepReport {
    double time = 0.0;
    // max over rays and steps of |e_mech(t) - e_mech(0)|, e_mech = p^2 + V
    double max_energy_drift = 0.0;
    // max over rays and steps of ||p| - 1| (meaningful for free-space runs)
    double max_speed_deviation = 0.0;
    // min over rays and steps of the tube width (caustic margin)
    double min_tube_width = std::numeric_limits<double>::infinity();
    // max of |p . grad Q| / (|p| |grad Q| + floor); zero by construction
    double max_transversality = 0.0;
};

struct RunResult {
    std::vector<Frame> frames;
    StepReport report;
    bool caustic_abort = false;
    int caustic_tube = -1;
    std::string abort_message;
};

// Total force -grad(V + Q) per ray. Exact mode runs the wavefront pipeline
// (geometry, transported amplitudes, Q, grad Q) on the bundle's current
// state; eikonal mode drops Q entirely. The equations of motion scale this
// by 1/2: dp/dt = -1/2 grad(V + Q).
std::vector<Vec2> force(const Bundle& bundle, const ScenarioConfig& config);

// One classical 4-stage explicit step of the full coupled state. The
// wavefront pipeline is recomputed at every stage from that stage's
// positions and momenta; amplitudes and q_value are refreshed from the
// final state. Throws CausticError leaving the input bundle untouched.
Bundle step_rk4(const Bundle& bundle, const ScenarioConfig& config);

// Fixed-step loop until t_max is reached, the central ray leaves
// [0, z_max], or a caustic aborts the run. Frames are recorded every
// record_every steps, always including the first and the last.
RunResult run(const ScenarioConfig& config);

}  // namespace waveray
