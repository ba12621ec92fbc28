#include "elres/field_eval.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>

namespace elres {
namespace {

std::set<int> orders(const Region& g) {
    std::set<int> s;
    for (const auto& t : g.terms) s.insert(t.n);
    for (const auto& t : g.sources) s.insert(t.mode.n);
    return s;
}

int locate(const FieldModel& m, double r, double eps_rel) {
    for (int k = 0; k < int(m.regions.size()); ++k) {
        const Region& g = m.regions[k];
        for (double b : {g.r_lo, g.r_hi})
            if (b > 0.0 && std::isfinite(b) && std::abs(r - b) <= eps_rel * b) return -1;
        if (r >= g.r_lo && r < g.r_hi) return k;
    }
    return -1;
}

}  // namespace

FieldModel nocore_field_model(const NocoreProblem& pb, const SourceModes& src, const std::vector<ModeSolution>& sols) {
    FieldModel m;
    m.omega = pb.omega;
    Region in{RegionTag::Shell, 0.0, pb.R, {}, {}, pb.shell};
    Region out{RegionTag::Exterior, pb.R, INFINITY, {}, {}, pb.matrix};
    for (std::size_t k = 0; k < sols.size(); ++k) {
        in.terms.push_back({pb.shell, pb.R, sols[k].n, sols[k].psi1});
        out.terms.push_back({pb.matrix, pb.R, sols[k].n, sols[k].psi2});
        out.sources.push_back({src[k], pb.matrix, pb.R});
    }
    m.regions = {in, out};
    return m;
}

FieldModel calr_field_model(const CoreShellConfig& cfg, const SourceModes& src,
                            const std::vector<CalrModeResult>& sols) {
    FieldModel m;
    m.omega = cfg.omega;
    const double ri = cfg.geo.r_i, re = cfg.geo.r_e;
    const LameParams sh = shell_at(cfg, cfg.p_tune);
    Region core{RegionTag::Core, 0.0, ri, {}, {}, cfg.core};
    Region shell{RegionTag::Shell, ri, re, {}, {}, sh};
    Region out{RegionTag::Exterior, re, INFINITY, {}, {}, cfg.matrix};
    for (std::size_t k = 0; k < sols.size(); ++k) {
        const int n = sols[k].n;
        const Vector8c& phi = sols[k].phi;
        core.terms.push_back({cfg.core, ri, n, phi.segment<2>(0)});
        shell.terms.push_back({sh, ri, n, phi.segment<2>(2)});
        shell.terms.push_back({sh, re, n, phi.segment<2>(4)});
        out.terms.push_back({cfg.matrix, re, n, phi.segment<2>(6)});
        out.sources.push_back({src[k], cfg.matrix, re});
    }
    m.regions = {core, shell, out};
    return m;
}

FieldModel single_potential_model(const LameParams& p, double omega, double R, int n, Density d) {
    FieldModel m;
    m.omega = omega;
    const Vec2c dens = d == Density::Nu ? Vec2c(1.0, 0.0) : Vec2c(0.0, 1.0);
    m.regions = {Region{RegionTag::Shell, 0.0, R, {{p, R, n, dens}}, {}, p},
                 Region{RegionTag::Exterior, R, INFINITY, {{p, R, n, dens}}, {}, p}};
    return m;
}

RadialField region_mode_field(const FieldModel& m, int region, int n, double r) {
    const Region& g = m.regions.at(region);
    r = std::max(r, 1e-12);
    RadialField f;
    for (const auto& t : g.terms) {
        if (t.n != n) continue;
        const Side side = g.r_lo >= t.rho ? Side::Outer : Side::Inner;
        f += t.density(0) * slp_field(t.params, m.omega, t.rho, n, Density::Nu, r, side);
        f += t.density(1) * slp_field(t.params, m.omega, t.rho, n, Density::T, r, side);
    }
    for (const auto& s : g.sources)
        if (s.mode.n == n) f += source_field(s.mode, s.matrix, m.omega, s.R, r);
    return f;
}

Vec2c eval_in_region(const FieldModel& m, int region, const Point& x) {
    const double r = x.norm(), th = std::atan2(x.y(), x.x());
    Vec2c u = Vec2c::Zero();
    for (int n : orders(m.regions.at(region))) {
        const RadialField f = region_mode_field(m, region, n, r);
        u += to_cartesian(n, th, f.a, f.b);
    }
    return u;
}

FieldGrid eval_total_field_serial(const FieldModel& m, const std::vector<Point>& pts, double eps_rel) {
    FieldGrid g{pts, std::vector<Vec2c>(pts.size(), Vec2c::Zero()), std::vector<RegionTag>(pts.size())};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const int k = locate(m, pts[i].norm(), eps_rel);
        g.tags[i] = k < 0 ? RegionTag::Skipped : m.regions[k].tag;
        if (k >= 0) g.values[i] = eval_in_region(m, k, pts[i]);
    }
    return g;
}

FieldGrid eval_total_field(const FieldModel& m, const std::vector<Point>& pts, double eps_rel) {
    FieldGrid g{pts, std::vector<Vec2c>(pts.size(), Vec2c::Zero()), std::vector<RegionTag>(pts.size())};
    const long np = long(pts.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < np; ++i) {
        const int k = locate(m, pts[i].norm(), eps_rel);
        g.tags[i] = k < 0 ? RegionTag::Skipped : m.regions[k].tag;
        if (k >= 0) g.values[i] = eval_in_region(m, k, pts[i]);
    }
    return g;
}

std::vector<ProfileRow> radial_profile(const FieldModel& m, const std::vector<double>& thetas,
                                       const std::vector<double>& radii) {
    std::vector<ProfileRow> rows(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        std::vector<Point> pts;
        for (double th : thetas) pts.emplace_back(radii[i] * std::cos(th), radii[i] * std::sin(th));
        const FieldGrid g = eval_total_field_serial(m, pts);
        double a = 0.0;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (g.tags[j] != RegionTag::Skipped) a = std::max(a, g.values[j].norm());
        rows[i] = {radii[i], a};
    }
    return rows;
}

std::vector<InterfaceResidual> transmission_residuals(const FieldModel& m, int samples) {
    std::vector<InterfaceResidual> out;
    for (int k = 0; k + 1 < int(m.regions.size()); ++k) {
        const Region &a = m.regions[k], &b = m.regions[k + 1];
        const double r = a.r_hi;
        std::set<int> ns = orders(a);
        for (int n : orders(b)) ns.insert(n);
        std::vector<std::array<Vec2c, 4>> coef;  // (u_a, u_b, t_a, t_b) per mode
        for (int n : ns) {
            const RadialField fa = region_mode_field(m, k, n, r), fb = region_mode_field(m, k + 1, n, r);
            coef.push_back({fa.trace(), fb.trace(), traction(a.material, n, r, fa), traction(b.material, n, r, fb)});
        }
        double du = 0.0, dt = 0.0, su = 0.0, st = 0.0;
        for (int j = 0; j < samples; ++j) {
            const double th = 2.0 * std::numbers::pi * j / samples;
            std::array<Vec2c, 4> v;
            v.fill(Vec2c::Zero());
            int i = 0;
            for (int n : ns) {
                for (int q = 0; q < 4; ++q) v[q] += to_cartesian(n, th, coef[i][q](0), coef[i][q](1));
                ++i;
            }
            du = std::max(du, (v[0] - v[1]).norm());
            dt = std::max(dt, (v[2] - v[3]).norm());
            su = std::max({su, v[0].norm(), v[1].norm()});
            st = std::max({st, v[2].norm(), v[3].norm()});
        }
        out.push_back({r, su > 0.0 ? du / su : du, st > 0.0 ? dt / st : dt});
    }
    return out;
}

std::vector<Point> polar_grid(const std::vector<double>& radii, int n_theta) {
    std::vector<Point> pts;
    for (double r : radii)
        for (int j = 0; j < n_theta; ++j) {
            const double th = 2.0 * std::numbers::pi * j / n_theta;
            pts.emplace_back(r * std::cos(th), r * std::sin(th));
        }
    return pts;
}

std::vector<Point> cartesian_grid(double xmin, double xmax, double ymin, double ymax, int nx, int ny) {
    std::vector<Point> pts;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            pts.emplace_back(nx > 1 ? xmin + (xmax - xmin) * i / (nx - 1) : xmin,
                             ny > 1 ? ymin + (ymax - ymin) * j / (ny - 1) : ymin);
    return pts;
}

const char* to_string(RegionTag t) {
    switch (t) {
        case RegionTag::Core: return "core";
        case RegionTag::Shell: return "shell";
        case RegionTag::Exterior: return "exterior";
        case RegionTag::Skipped: return "skipped";
    }
    return "?";
}

}  // namespace elres
