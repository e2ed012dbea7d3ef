#include <chrono>
#include <ctime>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "waveray/errors.hpp"
#include "waveray/io.hpp"
#include "waveray/scenarios.hpp"

namespace waveray {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCaustic = 3;

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

int do_run(const std::string& config_path, const std::string& out_dir,
           const std::string& mode_override, bool svg) {
    ScenarioConfig config;
    try {
        config = parse_config(config_path);
        if (mode_override == "exact")
            config.mode = Mode::exact;
        else if (mode_override == "eikonal")
            config.mode = Mode::eikonal;
        else if (!mode_override.empty()) {
            std::cerr << "error: --mode must be 'exact' or 'eikonal'\n";
            return kExitUsage;
        }
    } catch (const ValidationError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    }

    RunManifest manifest;
    manifest.config_echo = emit_config(config);
    manifest.started_at = utc_now();

    const RunResult result = run(config);

    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> files = write_frames(result.frames, dir);
    if (svg) {
        const std::pair<PlotKind, const char*> plots[] = {
            {PlotKind::trajectories, "trajectories.svg"},
            {PlotKind::profiles, "profiles.svg"},
            {PlotKind::width_vs_z, "width_vs_z.svg"},
        };
        for (const auto& [kind, name] : plots) {
            render_svg(result.frames, kind, dir / name, config);
            files.push_back(dir / name);
        }
    }

    manifest.finished_at = utc_now();
    manifest.report = result.report;
    manifest.status = result.caustic_abort ? "caustic_abort" : "completed";
    const auto manifest_path = dir / "manifest.json";
    for (const auto& f : files)
        manifest.outputs.push_back(f.filename().string());
    manifest.outputs.push_back(manifest_path.filename().string());
    write_manifest(manifest, manifest_path);

    std::cout << "run " << manifest.status << ": " << result.frames.size() << " frames, t="
              << result.report.time << ", wrote " << dir.string() << '\n';
    if (result.caustic_abort) {
        std::cerr << "caustic abort: " << result.abort_message << '\n';
        return kExitCaustic;
    }
    return kExitOk;
}

}  // namespace

int main_cli(int argc, const char* const* argv) {
    CLI::App app{"trajectory-based matter-wave beam simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir, mode_override;
    bool svg = false;
    CLI::App* cmd_run = app.add_subcommand("run", "integrate a scenario config");
    cmd_run->add_option("config", config_path, "JSON config file")->required();
    cmd_run->add_option("--out", out_dir, "output directory")->required();
    cmd_run->add_option("--mode", mode_override, "override the config mode (exact|eikonal)");
    cmd_run->add_flag("--svg", svg, "emit SVG plots alongside the CSV outputs");

    CLI::App* cmd_presets = app.add_subcommand("presets", "preset catalogue");
    CLI::App* cmd_presets_list = cmd_presets->add_subcommand("list", "one line per preset");
    cmd_presets->require_subcommand(1);

    std::string check_name;
    CLI::App* cmd_validate = app.add_subcommand("validate", "built-in validation checks");
    cmd_validate->add_option("check", check_name, "free-gaussian|two-gaussian|gradient-fields|energy-audit")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return kExitOk;
        }
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (cmd_run->parsed())
            return do_run(config_path, out_dir, mode_override, svg);
        if (cmd_presets->parsed() && cmd_presets_list->parsed()) {
            for (PresetTag tag : kAllPresets)
                std::cout << preset_summary(tag) << '\n';
            return kExitOk;
        }
        if (cmd_validate->parsed()) {
            CheckResult result;
            try {
                result = run_validation_check(check_name);
            } catch (const ValidationError& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitUsage;
            }
            std::cout << result.line << '\n';
            return result.pass ? kExitOk : kExitValidationFail;
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace waveray
