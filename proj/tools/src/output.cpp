#include "output.hpp"

#include "wgqed_cli/dispatch.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace wgqed::cli {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void RunManifest::write_comments(std::ostream &os) const {
    os << "# command: " << command << '\n';
    os << "# tool: wgqed " << tool_version << '\n';
    for (const auto &[k, v] : settings) os << "# " << k << ": " << v << '\n';
}

std::string RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["tool_version"] = tool_version;
    auto &s = j["settings"] = nlohmann::ordered_json::object();
    for (const auto &[k, v] : settings) s[k] = v;
    j["outputs"] = outputs;
    j["duration_s"] = duration_s;
    return j.dump(2) + "\n";
}

void write_csv(std::ostream &os, const RunManifest &m, const Table &t) {
    m.write_comments(os);
    for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
    os << '\n';
    for (const auto &row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
        os << '\n';
    }
}

namespace {

std::ofstream open_out(const std::filesystem::path &path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    return f;
}

void close_checked(std::ofstream &f, const std::filesystem::path &path) {
    f.flush();
    if (!f) throw IoError("write to " + path.string() + " failed");
}

} // namespace

void write_csv(const std::filesystem::path &path, const RunManifest &m, const Table &t) {
    auto f = open_out(path);
    write_csv(f, m, t);
    close_checked(f, path);
}

std::filesystem::path manifest_path(const std::filesystem::path &out) {
    auto p = out;
    p.replace_extension(".manifest.json");
    return p;
}

void write_text(const std::filesystem::path &path, const std::string &text) {
    auto f = open_out(path);
    f << text;
    close_checked(f, path);
}

namespace {

constexpr double W = 720, H = 440, ML = 80, MR = 150, MT = 40, MB = 60;

std::string esc(const std::string &s) {
    std::string o;
    for (char c : s) {
        switch (c) {
        case '<': o += "&lt;"; break;
        case '>': o += "&gt;"; break;
        case '&': o += "&amp;"; break;
        default: o += c;
        }
    }
    return o;
}

std::string fmt(double v, int prec = 4) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    return buf;
}

struct Axis {
    double lo, hi, px0, px1;
    double map(double v) const { return px0 + (v - lo) / (hi - lo) * (px1 - px0); }
};

void frame(std::ostringstream &os, const std::string &title, const std::string &xlabel,
           const std::string &ylabel, const Axis &ax, const Axis &ay) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << (ML + (W - MR)) / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
       << esc(title) << "</text>\n";
    os << "<rect x=\"" << ML << "\" y=\"" << MT << "\" width=\"" << W - ML - MR << "\" height=\""
       << H - MT - MB << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = ax.lo + (ax.hi - ax.lo) * i / 4.0;
        const double yv = ay.lo + (ay.hi - ay.lo) * i / 4.0;
        os << "<text x=\"" << ax.map(xv) << "\" y=\"" << H - MB + 16
           << "\" text-anchor=\"middle\">" << fmt(xv) << "</text>\n";
        os << "<text x=\"" << ML - 6 << "\" y=\"" << ay.map(yv) + 4 << "\" text-anchor=\"end\">"
           << fmt(yv) << "</text>\n";
    }
    os << "<text x=\"" << (ML + W - MR) / 2 << "\" y=\"" << H - 18 << "\" text-anchor=\"middle\">"
       << esc(xlabel) << "</text>\n";
    os << "<text x=\"18\" y=\"" << (MT + H - MB) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
       << (MT + H - MB) / 2 << ")\">" << esc(ylabel) << "</text>\n";
}

std::array<int, 3> colormap(double u) {
    // Dark blue -> teal -> yellow.
    static constexpr std::array<std::array<double, 3>, 5> anchors{{
        {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
    u = std::clamp(u, 0.0, 1.0) * 4.0;
    const int i = std::min(3, static_cast<int>(u));
    const double f = u - i;
    std::array<int, 3> c{};
    for (int k = 0; k < 3; ++k) {
        c[k] = static_cast<int>(std::lround(anchors[i][k] + f * (anchors[i + 1][k] - anchors[i][k])));
    }
    return c;
}

} // namespace

void write_line_svg(const std::filesystem::path &path, const std::string &title,
                    const std::string &xlabel, const std::string &ylabel,
                    const std::vector<double> &x, const std::vector<Series> &series) {
    static const char *colors[] = {"#c0392b", "#2471a3", "#229954", "#7d3c98", "#555555"};
    double ylo = 0.0, yhi = 0.0;
    for (const auto &s : series) {
        for (double v : s.y) {
            ylo = std::min(ylo, v);
            yhi = std::max(yhi, v);
        }
    }
    if (!(yhi > ylo)) yhi = ylo + 1.0;
    const Axis ax{x.front(), x.back() > x.front() ? x.back() : x.front() + 1.0, ML, W - MR};
    const Axis ay{ylo, yhi * 1.05, H - MB, MT};
    std::ostringstream os;
    frame(os, title, xlabel, ylabel, ax, ay);
    for (std::size_t k = 0; k < series.size(); ++k) {
        os << "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\"" << colors[k % 5] << "\" points=\"";
        for (std::size_t i = 0; i < x.size(); ++i) {
            os << fmt(ax.map(x[i]), 6) << ',' << fmt(ay.map(series[k].y[i]), 6) << ' ';
        }
        os << "\"/>\n";
        const double ly = MT + 16 + 18.0 * k;
        os << "<line x1=\"" << W - MR + 10 << "\" y1=\"" << ly << "\" x2=\"" << W - MR + 30
           << "\" y2=\"" << ly << "\" stroke=\"" << colors[k % 5] << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << W - MR + 36 << "\" y=\"" << ly + 4 << "\">" << esc(series[k].name)
           << "</text>\n";
    }
    os << "</svg>\n";
    write_text(path, os.str());
}

void write_heatmap_svg(const std::filesystem::path &path, const std::string &title,
                       const std::string &xlabel, const std::string &ylabel,
                       const std::vector<double> &x, const std::vector<double> &y,
                       const std::vector<double> &values) {
    const std::size_t nx = x.size(), ny = y.size();
    const double vmax = *std::max_element(values.begin(), values.end());
    const Axis ax{x.front(), x.back(), ML, W - MR};
    const Axis ay{y.front(), y.back(), H - MB, MT};
    std::ostringstream os;
    frame(os, title, xlabel, ylabel, ax, ay);
    // At most 200 cells per side; each cell shows the largest value it covers.
    const std::size_t cx = std::min<std::size_t>(nx, 200), cy = std::min<std::size_t>(ny, 200);
    const double cw = (W - ML - MR) / cx, ch = (H - MT - MB) / cy;
    for (std::size_t j = 0; j < cy; ++j) {
        for (std::size_t i = 0; i < cx; ++i) {
            double v = 0.0;
            for (std::size_t jj = j * ny / cy; jj < (j + 1) * ny / cy; ++jj) {
                for (std::size_t ii = i * nx / cx; ii < (i + 1) * nx / cx; ++ii) {
                    v = std::max(v, values[jj * nx + ii]);
                }
            }
            const auto c = colormap(vmax > 0.0 ? v / vmax : 0.0);
            os << "<rect x=\"" << fmt(ML + i * cw, 6) << "\" y=\"" << fmt(H - MB - (j + 1) * ch, 6)
               << "\" width=\"" << fmt(cw + 0.05, 4) << "\" height=\"" << fmt(ch + 0.05, 4)
               << "\" fill=\"rgb(" << c[0] << ',' << c[1] << ',' << c[2] << ")\"/>\n";
        }
    }
    os << "<text x=\"" << W - MR + 10 << "\" y=\"" << MT + 12 << "\">max " << fmt(vmax) << "</text>\n";
    os << "</svg>\n";
    write_text(path, os.str());
}

} // namespace wgqed::cli
