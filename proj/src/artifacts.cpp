#include "fearbd/artifacts.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fearbd {

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt6(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace

std::string snapshots_csv(const std::vector<Snapshot>& snaps, const Grid1D& g) {
    std::ostringstream out;
    out << "t,x,u,v\n";
    for (const Snapshot& s : snaps)
        for (int i = 0; i < g.n; ++i)
            out << fmt17(s.t) << ',' << fmt17(g.x(i)) << ',' << fmt17(s.u[i])
                << ',' << fmt17(s.v[i]) << '\n';
    return out.str();
}

std::string summary_json(const RunConfig& cfg, const RunSummary& summary) {
    nlohmann::json j;
    j["name"] = cfg.name;
    j["config_hash"] = config_hash(cfg);
    j["classification"] = summary.classification;
    j["monitors"] = {
        {"tail_max_u", summary.tail_max_u},
        {"tail_max_v", summary.tail_max_v},
        {"var_u", summary.var_u},
        {"var_v", summary.var_v},
        {"v_mass", summary.v_mass},
        {"tail_var_rate", summary.tail_var_rate},
    };
    j["t_end"] = cfg.solver.t_end;
    j["config_ini"] = serialize(cfg);
    return j.dump(2) + "\n";
}

std::string report_json(const RunConfig& cfg, const DispersionReport& rep,
                        const NonexistenceReport& nonex) {
    nlohmann::json j;
    j["config_hash"] = config_hash(cfg);
    j["entries"] = {{"M", rep.entries.M},
                    {"N", rep.entries.N},
                    {"P", rep.entries.P},
                    {"Q", rep.entries.Q}};
    j["condition_4_13"] = rep.condition_holds;
    j["mu_minus"] = rep.mu_minus;
    j["mu_plus"] = rep.mu_plus;
    j["unstable_modes"] = rep.unstable_modes;
    j["gamma"] = rep.gamma;
    j["pattern_predicted"] = rep.pattern_predicted;
    j["some_mode_unstable"] = rep.some_mode_unstable;
    j["ratio_M_d1"] = rep.ratio_M_d1;
    j["d_star"] = nonex.d_star;
    j["nonexistence"] = {{"chi", nonex.chi},
                         {"mu_lower", nonex.mu_lower},
                         {"C1", nonex.C1},
                         {"C2", nonex.C2},
                         {"C3", nonex.C3},
                         {"C4", nonex.C4},
                         {"poincare_const", nonex.poincare_const}};
    return j.dump(2) + "\n";
}

std::string report_text(const DispersionReport& rep,
                        const NonexistenceReport& nonex) {
    std::ostringstream out;
    out << "linearization entries: M=" << fmt6(rep.entries.M)
        << " N=" << fmt6(rep.entries.N) << " P=" << fmt6(rep.entries.P)
        << " Q=" << fmt6(rep.entries.Q) << "\n";
    out << "M/d1 = " << fmt6(rep.ratio_M_d1) << "\n";
    if (rep.condition_holds) {
        out << "instability condition holds; mode window = ("
            << fmt6(rep.mu_minus) << ", " << fmt6(rep.mu_plus) << ")\n";
        out << "unstable modes:";
        for (int i : rep.unstable_modes) out << ' ' << i;
        out << "  (gamma = " << rep.gamma << ")\n";
    } else {
        out << "instability condition does not hold (no mode window)\n";
    }
    out << "pattern predicted: " << (rep.pattern_predicted ? "yes" : "no") << "\n";
    out << "large-diffusion threshold d* = " << fmt6(nonex.d_star)
        << "  (chi=" << fmt6(nonex.chi) << ", mu_lower=" << fmt6(nonex.mu_lower)
        << ", C_p=" << fmt6(nonex.poincare_const) << ")\n";
    return out.str();
}

std::array<unsigned char, 3> colormap256(double t) {
    // Five anchor colors, linearly interpolated to a fixed 256-entry table.
    static const std::array<std::array<int, 3>, 5> stops = {{
        {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
    t = std::clamp(t, 0.0, 1.0);
    const int idx = std::min(255, static_cast<int>(t * 255.0 + 0.5));
    const double s = idx / 255.0 * 4.0;
    const int seg = std::min(3, static_cast<int>(s));
    const double f = s - seg;
    std::array<unsigned char, 3> rgb{};
    for (int c = 0; c < 3; ++c)
        rgb[c] = static_cast<unsigned char>(
            stops[seg][c] + f * (stops[seg + 1][c] - stops[seg][c]) + 0.5);
    return rgb;
}

namespace {

std::string rgb_hex(const std::array<unsigned char, 3>& c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c[0], c[1], c[2]);
    return buf;
}

}  // namespace

std::string heatmap_svg(const std::vector<Snapshot>& snaps, const Grid1D& g,
                        bool predator, const std::string& title,
                        const std::string& hash) {
    const int max_rows = 160, max_cols = 128;
    const int nt = static_cast<int>(snaps.size());
    const int row_stride = std::max(1, (nt + max_rows - 1) / max_rows);
    const int col_stride = std::max(1, (g.n + max_cols - 1) / max_cols);

    double lo = 1e300, hi = -1e300;
    for (int r = 0; r < nt; r += row_stride) {
        const auto& f = predator ? snaps[r].v : snaps[r].u;
        for (int i = 0; i < g.n; i += col_stride) {
            lo = std::min(lo, f[i]);
            hi = std::max(hi, f[i]);
        }
    }
    if (hi <= lo) hi = lo + 1.0;

    const int rows = (nt + row_stride - 1) / row_stride;
    const int cols = (g.n + col_stride - 1) / col_stride;
    const double W = 640.0, H = 420.0, ml = 60.0, mb = 40.0, mt = 30.0, mr = 20.0;
    const double cw = (W - ml - mr) / cols, ch = (H - mt - mb) / rows;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
        << "\" height=\"" << H << "\">\n";
    out << "<!-- config_hash=" << hash << " -->\n";
    out << "<text x=\"" << W / 2 << "\" y=\"18\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"13\">" << title << "</text>\n";
    int ri = 0;
    for (int r = 0; r < nt; r += row_stride, ++ri) {
        const auto& f = predator ? snaps[r].v : snaps[r].u;
        int ci = 0;
        for (int i = 0; i < g.n; i += col_stride, ++ci) {
            const double t01 = (f[i] - lo) / (hi - lo);
            out << "<rect x=\"" << fmt6(ml + ci * cw) << "\" y=\""
                << fmt6(mt + ri * ch) << "\" width=\"" << fmt6(cw + 0.5)
                << "\" height=\"" << fmt6(ch + 0.5) << "\" fill=\""
                << rgb_hex(colormap256(t01)) << "\"/>\n";
        }
    }
    // Axes and labels.
    out << "<text x=\"" << W / 2 << "\" y=\"" << H - 8
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"12\">x (0 .. " << fmt6(g.L) << ")</text>\n";
    out << "<text x=\"16\" y=\"" << H / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
        << "transform=\"rotate(-90 16 " << H / 2 << ")\">t (" << fmt6(snaps.front().t)
        << " .. " << fmt6(snaps.back().t) << ")</text>\n";
    out << "<text x=\"" << ml << "\" y=\"" << H - 8
        << "\" font-family=\"sans-serif\" font-size=\"10\">range [" << fmt6(lo)
        << ", " << fmt6(hi) << "]</text>\n";
    out << "</svg>\n";
    return out.str();
}

std::string profiles_svg(const Field& final_field, const Grid1D& g,
                         const std::string& title, const std::string& hash) {
    const double W = 640.0, H = 360.0, ml = 60.0, mb = 40.0, mt = 30.0, mr = 20.0;
    auto poly = [&](const std::vector<double>& f, const char* color) {
        double lo = *std::min_element(f.begin(), f.end());
        double hi = *std::max_element(f.begin(), f.end());
        if (hi - lo < 1e-12) {
            lo -= 1.0;
            hi += 1.0;
        }
        std::ostringstream p;
        p << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\" points=\"";
        for (int i = 0; i < g.n; ++i) {
            const double px = ml + (W - ml - mr) * g.x(i) / g.L;
            const double py = H - mb - (H - mt - mb) * (f[i] - lo) / (hi - lo);
            p << fmt6(px) << ',' << fmt6(py) << ' ';
        }
        p << "\"/>\n";
        return p.str();
    };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
        << "\" height=\"" << H << "\">\n";
    out << "<!-- config_hash=" << hash << " -->\n";
    out << "<text x=\"" << W / 2 << "\" y=\"18\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"13\">" << title << "</text>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr
        << "\" y2=\"" << H - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
        << "\" y2=\"" << H - mb << "\" stroke=\"black\"/>\n";
    out << poly(final_field.u, "#1f77b4") << poly(final_field.v, "#d62728");
    out << "<text x=\"" << W - 150 << "\" y=\"" << mt + 14
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#1f77b4\">u "
        << "(scaled)</text>\n";
    out << "<text x=\"" << W - 150 << "\" y=\"" << mt + 30
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#d62728\">v "
        << "(scaled)</text>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"" << H - 8
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"12\">x</text>\n";
    out << "</svg>\n";
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace fearbd
