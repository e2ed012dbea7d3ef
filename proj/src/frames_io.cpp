#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "waveray/io.hpp"

namespace waveray {

namespace {

// 12 significant digits, compact
std::string num12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::ofstream open_out(const std::filesystem::path& p) {
    std::ofstream out(p);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + p.string());
    return out;
}

}  // namespace

std::vector<std::filesystem::path> write_frames(const std::vector<Frame>& frames,
                                                const std::filesystem::path& dir) {
    if (frames.empty())
        throw std::runtime_error("write_frames: no frames");
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;

    {
        const auto path = dir / "trajectories.csv";
        std::ofstream out = open_out(path);
        out << "frame,time,ray_index,x,z,px,pz,amplitude,q_value,e_mech\n";
        for (std::size_t k = 0; k < frames.size(); ++k) {
            const Frame& f = frames[k];
            for (int j = 0; j < f.n_rays(); ++j) {
                out << k << ',' << num12(f.time) << ',' << j << ',' << num12(f.x[j]) << ','
                    << num12(f.z[j]) << ',' << num12(f.px[j]) << ',' << num12(f.pz[j]) << ','
                    << num12(f.amplitude[j]) << ',' << num12(f.q_value[j]) << ','
                    << num12(f.e_mech[j]) << '\n';
            }
        }
        if (!out.good())
            throw std::runtime_error("write failed: " + path.string());
        written.push_back(path);
    }

    {
        const auto path = dir / "profiles.csv";
        std::ofstream out = open_out(path);
        out << "frame,x,intensity\n";
        const std::size_t picks[2] = {0, frames.size() - 1};
        for (std::size_t k : picks) {
            const Frame& f = frames[k];
            for (int j = 0; j < f.n_rays(); ++j)
                out << k << ',' << num12(f.x[j]) << ','
                    << num12(f.amplitude[j] * f.amplitude[j]) << '\n';
            if (frames.size() == 1)
                break;
        }
        if (!out.good())
            throw std::runtime_error("write failed: " + path.string());
        written.push_back(path);
    }

    return written;
}

void write_manifest(const RunManifest& m, const std::filesystem::path& path) {
    nlohmann::json j;
    j["artifact_version"] = m.artifact_version;
    j["status"] = m.status;
    j["started_at"] = m.started_at;
    j["finished_at"] = m.finished_at;
    j["config"] = m.config_echo;
    j["outputs"] = m.outputs;
    j["report"] = {
        {"time", m.report.time},
        {"max_energy_drift", m.report.max_energy_drift},
        {"max_speed_deviation", m.report.max_speed_deviation},
        {"min_tube_width", m.report.min_tube_width},
        {"max_transversality", m.report.max_transversality},
    };
    nlohmann::json v = nlohmann::json::array();
    for (const auto& [name, pass] : m.validations)
        v.push_back({{"check", name}, {"pass", pass}});
    j["validations"] = v;

    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path.string());
    out << j.dump(2) << '\n';
    if (!out.good())
        throw std::runtime_error("write failed: " + path.string());
}

}  // namespace waveray
