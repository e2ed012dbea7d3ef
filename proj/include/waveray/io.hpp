#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "waveray/core.hpp"
#include "waveray/integrator.hpp"

namespace waveray {

inline constexpr const char* kArtifactVersion = "0.1.0";

// Parses the JSON config schema. Keys: preset, epsilon, n_rays, span,
// profile {type, offset}, field {type, f, v0_ratio, z_g, d, alpha, z_l,
// l_x, l_z, z_0}, mode, dt, t_max, z_max, record_every, smoothing,
// caustic_min_spacing. A preset key expands first, explicit keys override.
// Unknown keys are rejected; every error names the offending key path.
ScenarioConfig parse_config(const std::filesystem::path& path);
ScenarioConfig parse_config_json(const nlohmann::json& j);

// Full explicit echo of a config (no preset key); parse(emit(c)) == c.
nlohmann::json emit_config(const ScenarioConfig& config);

// trajectories.csv (one row per ray per frame) and profiles.csv
// (first/last frame transverse intensity). 12 significant digits.
// Returns the files written.
std::vector<std::filesystem::path> write_frames(const std::vector<Frame>& frames,
                                                const std::filesystem::path& dir);

enum class PlotKind { trajectories, profiles, width_vs_z };

// Standalone SVG: ray polylines (waist rays emphasized), initial/final
// intensity overlay, or width vs z with the analytic waist overlay for
// free-space scenarios.
void render_svg(const std::vector<Frame>& frames, PlotKind kind,
                const std::filesystem::path& path, const ScenarioConfig& config);

struct RunManifest {
    nlohmann::json config_echo;
    std::string artifact_version = kArtifactVersion;
    std::string started_at;
    std::string finished_at;
    std::vector<std::string> outputs;
    StepReport report;
    std::string status;  // "completed" or "caustic_abort"
    std::vector<std::pair<std::string, bool>> validations;  // name -> PASS
};

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);

// Named validation checks for the CLI: free-gaussian, two-gaussian,
// gradient-fields, energy-audit.
struct CheckResult {
    bool pass = false;
    std::string line;  // one-line summary with the metric values
};

CheckResult run_validation_check(const std::string& name);
std::vector<std::string> validation_check_names();

// Exit codes: 0 success / PASS, 1 validation FAIL, 2 usage or config
// error, 3 caustic abort.
int main_cli(int argc, const char* const* argv);

}  // namespace waveray
