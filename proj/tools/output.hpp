#pragma once
// Artifact writers: fixed-precision CSV, SVG line plots and heat maps, file hashing.

#include <fstream>
#include <string>
#include <vector>

namespace cli {

// 17 significant digits, so a rerun reproduces the file byte for byte.
std::string num(double v);

class Csv {
public:
    Csv(const std::string& path, const std::vector<std::string>& header);
    Csv& operator<<(double v);
    Csv& operator<<(int v);
    Csv& operator<<(const std::string& s);
    void end_row();

private:
    void sep();
    std::ofstream out_;
    bool first_ = true;
};

struct Series {
    std::string name;
    std::vector<double> y;
};

// Non-finite and (for log_y) non-positive values are dropped from the path.
void write_line_svg(const std::string& path, const std::string& title, const std::string& xlabel,
                    const std::vector<double>& x, const std::vector<Series>& series, bool log_y, bool log_x = false);

// values are row-major, ny rows of nx; NaN cells are left blank.
void write_heatmap_svg(const std::string& path, const std::string& title, int nx, int ny,
                       const std::vector<double>& values, double xmin, double xmax, double ymin, double ymax);

std::string sha256_file(const std::string& path);

}  // namespace cli
