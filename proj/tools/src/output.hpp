#pragma once

#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wgqed::cli {

/// Output path could not be written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 17 significant digits, shortest exponent form from %.17g.
std::string format_number(double v);

/// What produced an output file. Everything except the wall-clock duration is
/// written into the CSV header, so equal manifests give byte-identical CSV.
struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> settings;
    std::vector<std::string> outputs;
    double duration_s = 0.0;

    void set(const std::string &key, double value) { settings.emplace_back(key, format_number(value)); }
    void set(const std::string &key, const std::string &value) { settings.emplace_back(key, value); }
    void write_comments(std::ostream &os) const;
    std::string to_json() const;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Writes '#' manifest lines, the header row and the rows with LF endings.
void write_csv(std::ostream &os, const RunManifest &m, const Table &t);
void write_csv(const std::filesystem::path &path, const RunManifest &m, const Table &t);

/// Sibling manifest path: data.csv -> data.manifest.json.
std::filesystem::path manifest_path(const std::filesystem::path &out);
void write_text(const std::filesystem::path &path, const std::string &text);

struct Series {
    std::string name;
    std::vector<double> y;
};

void write_line_svg(const std::filesystem::path &path, const std::string &title,
                    const std::string &xlabel, const std::string &ylabel,
                    const std::vector<double> &x, const std::vector<Series> &series);

/// values is row-major over (y, x): values[iy * x.size() + ix].
void write_heatmap_svg(const std::filesystem::path &path, const std::string &title,
                       const std::string &xlabel, const std::string &ylabel,
                       const std::vector<double> &x, const std::vector<double> &y,
                       const std::vector<double> &values);

} // namespace wgqed::cli
