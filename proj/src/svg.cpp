#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "waveray/io.hpp"
#include "waveray/scenarios.hpp"

namespace waveray {

namespace {

constexpr double kWidth = 880.0;
constexpr double kHeight = 560.0;
constexpr double kMarginL = 70.0, kMarginR = 25.0, kMarginT = 30.0, kMarginB = 55.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Mapper {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;

    void include(double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    void reset() {
        xmin = ymin = std::numeric_limits<double>::infinity();
        xmax = ymax = -std::numeric_limits<double>::infinity();
    }
    void pad() {
        if (!(xmax > xmin)) { xmin -= 1.0; xmax += 1.0; }
        if (!(ymax > ymin)) { ymin -= 1.0; ymax += 1.0; }
        const double py = 0.05 * (ymax - ymin);
        ymin -= py;
        ymax += py;
    }
    double sx(double x) const {
        return kMarginL + (x - xmin) / (xmax - xmin) * (kWidth - kMarginL - kMarginR);
    }
    double sy(double y) const {
        return kHeight - kMarginB - (y - ymin) / (ymax - ymin) * (kHeight - kMarginT - kMarginB);
    }
};

void emit_polyline(std::ostringstream& svg, const Mapper& m, const std::vector<double>& xs,
                   const std::vector<double>& ys, const char* color, double stroke_width,
                   bool dashed = false) {
    svg << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << stroke_width
        << "\"";
    if (dashed)
        svg << " stroke-dasharray=\"6,4\"";
    svg << " points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            svg << ' ';
        svg << fmt(m.sx(xs[i])) << ',' << fmt(m.sy(ys[i]));
    }
    svg << "\"/>\n";
}

void emit_axes(std::ostringstream& svg, const Mapper& m, const char* xlabel, const char* ylabel) {
    svg << "  <rect x=\"" << fmt(kMarginL) << "\" y=\"" << fmt(kMarginT) << "\" width=\""
        << fmt(kWidth - kMarginL - kMarginR) << "\" height=\"" << fmt(kHeight - kMarginT - kMarginB)
        << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"1\"/>\n";
    svg << "  <g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = m.xmin + (m.xmax - m.xmin) * i / 4.0;
        const double fy = m.ymin + (m.ymax - m.ymin) * i / 4.0;
        svg << "    <text x=\"" << fmt(m.sx(fx)) << "\" y=\"" << fmt(kHeight - kMarginB + 16.0)
            << "\" text-anchor=\"middle\">" << fmt(fx) << "</text>\n";
        svg << "    <text x=\"" << fmt(kMarginL - 6.0) << "\" y=\"" << fmt(m.sy(fy) + 4.0)
            << "\" text-anchor=\"end\">" << fmt(fy) << "</text>\n";
    }
    svg << "    <text x=\"" << fmt((kMarginL + kWidth - kMarginR) / 2.0) << "\" y=\""
        << fmt(kHeight - 12.0) << "\" text-anchor=\"middle\" font-size=\"13\">" << xlabel
        << "</text>\n";
    svg << "    <text x=\"16\" y=\"" << fmt((kMarginT + kHeight - kMarginB) / 2.0)
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90,16,"
        << fmt((kMarginT + kHeight - kMarginB) / 2.0) << ")\">" << ylabel << "</text>\n";
    svg << "  </g>\n";
}

void render_trajectories(std::ostringstream& svg, const std::vector<Frame>& frames) {
    const Frame& launch = frames.front();
    const int n = launch.n_rays();
    Mapper m;
    m.reset();
    for (const Frame& f : frames)
        for (int j = 0; j < n; ++j)
            m.include(f.z[j], f.x[j]);
    m.pad();
    emit_axes(svg, m, "z / w0", "x / w0");

    std::vector<double> zs(frames.size()), xs(frames.size());
    std::vector<int> heavy;
    for (int j = 0; j < n; ++j)
        if (std::abs(std::abs(launch.x[j]) - 1.0) < 1e-6)
            heavy.push_back(j);
    for (int j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < frames.size(); ++k) {
            zs[k] = frames[k].z[j];
            xs[k] = frames[k].x[j];
        }
        const bool is_heavy = std::find(heavy.begin(), heavy.end(), j) != heavy.end();
        emit_polyline(svg, m, zs, xs, is_heavy ? "#000000" : "#4a78b8", is_heavy ? 2.5 : 0.7);
    }
}

void render_profiles(std::ostringstream& svg, const std::vector<Frame>& frames) {
    const Frame& first = frames.front();
    const Frame& last = frames.back();
    Mapper m;
    m.reset();
    auto intensity = [](const Frame& f, int j) { return f.amplitude[j] * f.amplitude[j]; };
    for (int j = 0; j < first.n_rays(); ++j)
        m.include(first.x[j], intensity(first, j));
    for (int j = 0; j < last.n_rays(); ++j)
        m.include(last.x[j], intensity(last, j));
    m.pad();
    emit_axes(svg, m, "x / w0", "intensity R^2");

    std::vector<double> xs, ys;
    for (int j = 0; j < first.n_rays(); ++j) {
        xs.push_back(first.x[j]);
        ys.push_back(intensity(first, j));
    }
    emit_polyline(svg, m, xs, ys, "#888888", 1.5, true);
    xs.clear();
    ys.clear();
    for (int j = 0; j < last.n_rays(); ++j) {
        xs.push_back(last.x[j]);
        ys.push_back(intensity(last, j));
    }
    emit_polyline(svg, m, xs, ys, "#b03030", 2.0);
}

void render_width_vs_z(std::ostringstream& svg, const std::vector<Frame>& frames,
                       const ScenarioConfig& config) {
    const int center = frames.front().n_rays() / 2;
    std::vector<double> zs, ws;
    for (const Frame& f : frames) {
        zs.push_back(f.z[center]);
        ws.push_back(f.half_width);
    }
    Mapper m;
    m.reset();
    for (std::size_t k = 0; k < zs.size(); ++k)
        m.include(zs[k], ws[k]);
    m.include(zs.front(), 0.0);
    m.pad();
    emit_axes(svg, m, "z / w0", "rms half-width / w0");
    emit_polyline(svg, m, zs, ws, "#b03030", 2.0);

    if (is_free_field(config.field)) {
        // analytic paraxial waist law scaled to the launch rms width
        std::vector<double> wa(zs.size());
        for (std::size_t k = 0; k < zs.size(); ++k)
            wa[k] = ws.front() * analytic_waist(zs[k], config.units);
        emit_polyline(svg, m, zs, wa, "#000000", 1.5, true);
    }
}

}  // namespace

void render_svg(const std::vector<Frame>& frames, PlotKind kind,
                const std::filesystem::path& path, const ScenarioConfig& config) {
    if (frames.empty())
        throw std::runtime_error("render_svg: no frames");

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    switch (kind) {
        case PlotKind::trajectories: render_trajectories(svg, frames); break;
        case PlotKind::profiles: render_profiles(svg, frames); break;
        case PlotKind::width_vs_z: render_width_vs_z(svg, frames, config); break;
    }

    svg << "</svg>\n";

    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path.string());
    out << svg.str();
    if (!out.good())
        throw std::runtime_error("write failed: " + path.string());
}

}  // namespace waveray
