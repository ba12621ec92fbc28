#include "output.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <stdexcept>

namespace cli {

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Csv::Csv(const std::string& path, const std::vector<std::string>& header) : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot write " + path);
    for (const auto& h : header) *this << h;
    end_row();
}

void Csv::sep() {
    if (!first_) out_ << ',';
    first_ = false;
}

Csv& Csv::operator<<(double v) {
    sep();
    out_ << num(v);
    return *this;
}

Csv& Csv::operator<<(int v) {
    sep();
    out_ << v;
    return *this;
}

Csv& Csv::operator<<(const std::string& s) {
    sep();
    out_ << s;
    return *this;
}

void Csv::end_row() {
    out_ << '\n';
    first_ = true;
}

namespace {

constexpr double W = 720, H = 440, L = 80, Rm = 150, T = 40, B = 50;
const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::FILE* open_svg(const std::string& path, double w, double h) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot write " + path);
    std::fprintf(f, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%g\" height=\"%g\" font-family=\"sans-serif\" "
                    "font-size=\"12\">\n<rect width=\"100%%\" height=\"100%%\" fill=\"white\"/>\n", w, h);
    return f;
}

std::string esc(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '<') o += "&lt;";
        else if (c == '>') o += "&gt;";
        else if (c == '&') o += "&amp;";
        else o += c;
    }
    return o;
}

}  // namespace

void write_line_svg(const std::string& path, const std::string& title, const std::string& xlabel,
                    const std::vector<double>& x, const std::vector<Series>& series, bool log_y, bool log_x) {
    auto ok_y = [&](double v) { return std::isfinite(v) && (!log_y || v > 0); };
    auto tx = [&](double v) { return log_x ? std::log10(v) : v; };
    auto ty = [&](double v) { return log_y ? std::log10(v) : v; };
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (double v : x) {
        x0 = std::min(x0, tx(v));
        x1 = std::max(x1, tx(v));
    }
    for (const auto& s : series)
        for (double v : s.y)
            if (ok_y(v)) {
                y0 = std::min(y0, ty(v));
                y1 = std::max(y1, ty(v));
            }
    if (!(x1 > x0)) x1 = x0 + 1;
    if (!std::isfinite(y0)) y0 = 0, y1 = 1;
    if (!(y1 > y0)) y1 = y0 + 1;
    auto px = [&](double v) { return L + (tx(v) - x0) / (x1 - x0) * (W - L - Rm); };
    auto py = [&](double v) { return H - B - (ty(v) - y0) / (y1 - y0) * (H - T - B); };

    std::FILE* f = open_svg(path, W, H);
    std::fprintf(f, "<text x=\"%g\" y=\"24\" font-size=\"14\">%s</text>\n", L, esc(title).c_str());
    std::fprintf(f, "<rect x=\"%g\" y=\"%g\" width=\"%g\" height=\"%g\" fill=\"none\" stroke=\"black\"/>\n", L, T,
                 W - L - Rm, H - T - B);
    for (int k = 0; k <= 4; ++k) {
        const double yv = y0 + (y1 - y0) * k / 4, xv = x0 + (x1 - x0) * k / 4;
        const double yp = H - B - (H - T - B) * k / 4, xp = L + (W - L - Rm) * k / 4;
        std::fprintf(f, "<text x=\"%g\" y=\"%g\" text-anchor=\"end\">%s%.4g</text>\n", L - 6, yp + 4,
                     log_y ? "1e" : "", yv);
        std::fprintf(f, "<text x=\"%g\" y=\"%g\" text-anchor=\"middle\">%s%.5g</text>\n", xp, H - B + 18,
                     log_x ? "1e" : "", xv);
    }
    std::fprintf(f, "<text x=\"%g\" y=\"%g\" text-anchor=\"middle\">%s</text>\n", L + (W - L - Rm) / 2, H - 10,
                 esc(xlabel).c_str());
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* col = kColors[s % std::size(kColors)];
        std::string d;
        bool pen = false;
        for (std::size_t i = 0; i < x.size() && i < series[s].y.size(); ++i) {
            const double v = series[s].y[i];
            if (!ok_y(v)) {
                pen = false;
                continue;
            }
            char buf[64];
            std::snprintf(buf, sizeof buf, "%c%.2f %.2f ", pen ? 'L' : 'M', px(x[i]), py(v));
            d += buf;
            pen = true;
        }
        std::fprintf(f, "<path d=\"%s\" fill=\"none\" stroke=\"%s\" stroke-width=\"1.5\"/>\n", d.c_str(), col);
        std::fprintf(f, "<text x=\"%g\" y=\"%g\" fill=\"%s\">%s</text>\n", W - Rm + 10, T + 16 + 18.0 * s, col,
                     esc(series[s].name).c_str());
    }
    std::fprintf(f, "</svg>\n");
    std::fclose(f);
}

void write_heatmap_svg(const std::string& path, const std::string& title, int nx, int ny,
                       const std::vector<double>& values, double xmin, double xmax, double ymin, double ymax) {
    double lo = INFINITY, hi = -INFINITY;
    for (double v : values)
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    if (!(hi > lo)) hi = lo + 1;
    const double side = 400, cw = side / nx, ch = side / ny;
    std::FILE* f = open_svg(path, side + L + 120, side + T + B);
    std::fprintf(f, "<text x=\"%g\" y=\"24\" font-size=\"14\">%s</text>\n", L, esc(title).c_str());
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const double v = values[std::size_t(j) * nx + i];
            if (!std::isfinite(v)) continue;
            // white -> dark red
            const double t = (v - lo) / (hi - lo);
            const int r = int(255 - 100 * t), g = int(255 * (1 - t)), b = int(255 * (1 - t));
            std::fprintf(f, "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"rgb(%d,%d,%d)\"/>\n",
                         L + i * cw, T + (ny - 1 - j) * ch, cw + 0.05, ch + 0.05, r, g, b);
        }
    std::fprintf(f, "<rect x=\"%g\" y=\"%g\" width=\"%g\" height=\"%g\" fill=\"none\" stroke=\"black\"/>\n", L, T,
                 side, side);
    std::fprintf(f, "<text x=\"%g\" y=\"%g\" text-anchor=\"middle\">%.3g</text>\n", L, T + side + 18, xmin);
    std::fprintf(f, "<text x=\"%g\" y=\"%g\" text-anchor=\"middle\">%.3g</text>\n", L + side, T + side + 18, xmax);
    std::fprintf(f, "<text x=\"%g\" y=\"%g\" text-anchor=\"end\">%.3g</text>\n", L - 6, T + side, ymin);
    std::fprintf(f, "<text x=\"%g\" y=\"%g\" text-anchor=\"end\">%.3g</text>\n", L - 6, T + 10, ymax);
    std::fprintf(f, "<text x=\"%g\" y=\"%g\">max %.4g</text>\n", L + side + 10, T + 12, hi);
    std::fprintf(f, "<text x=\"%g\" y=\"%g\">min %.4g</text>\n", L + side + 10, T + side, lo);
    std::fprintf(f, "</svg>\n");
    std::fclose(f);
}

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "";
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buf[8192];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) EVP_DigestUpdate(ctx, buf, std::size_t(in.gcount()));
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    EVP_DigestFinal_ex(ctx, md, &len);
    EVP_MD_CTX_free(ctx);
    std::string hex;
    char h[3];
    for (unsigned i = 0; i < len; ++i) {
        std::snprintf(h, sizeof h, "%02x", md[i]);
        hex += h;
    }
    return hex;
}

}  // namespace cli
