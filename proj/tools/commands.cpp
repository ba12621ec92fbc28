#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "config.hpp"
#include "output.hpp"

namespace cli {

using namespace elres;
using nlohmann::json;

std::string RunContext::path(const std::string& name) {
    outputs.push_back(name);
    return out_dir + "/" + name;
}

namespace {

constexpr double kPi = std::numbers::pi;

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

std::vector<double> thetas(int m) {
    std::vector<double> t(m);
    for (int j = 0; j < m; ++j) t[j] = 2 * kPi * j / m;
    return t;
}

void write_profile(const FieldModel& m, const std::vector<double>& radii, RunContext& ctx) {
    if (radii.empty()) return;
    const auto rows = radial_profile(m, thetas(64), radii);
    Csv csv(ctx.path("profile.csv"), {"r", "max_amplitude"});
    std::vector<double> r, a;
    for (const auto& p : rows) {
        (csv << p.r << p.max_amplitude).end_row();
        r.push_back(p.r);
        a.push_back(p.max_amplitude);
    }
    if (ctx.svg) write_line_svg(ctx.path("profile.svg"), "max |u| over angle", "r", r, {{"max |u|", a}}, true);
}

void record_residuals(const FieldModel& m, RunContext& ctx) {
    json arr = json::array();
    for (const auto& t : transmission_residuals(m))
        arr.push_back({{"radius", t.radius}, {"displacement", t.displacement}, {"traction", t.traction}});
    ctx.summary["transmission_residuals"] = arr;
}

}  // namespace

void run_spectrum(const YAML::Node& root, RunContext& ctx) {
    const SpectrumConfig c = parse_spectrum(root);
    Csv csv(ctx.path("spectrum.csv"), {"n", "xi1_re", "xi1_im", "xi2_re", "xi2_im", "case"});
    std::vector<double> ns, r1, r2;
    for (int n : c.modes) {
        const NpEigenSystem e = np_eigensystem(np_matrix(c.matrix, c.omega, c.R, n), c.tol);
        if (!std::isfinite(std::abs(e.xi[0])) || !std::isfinite(std::abs(e.xi[1])))
            throw NumericFailure("np_spectrum", "non-finite eigenvalue at n = " + std::to_string(n));
        (csv << n << e.xi[0].real() << e.xi[0].imag() << e.xi[1].real() << e.xi[1].imag() << to_string(e.case_tag))
            .end_row();
        ns.push_back(n);
        r1.push_back(e.xi[0].real());
        r2.push_back(e.xi[1].real());
        ctx.summary["last"] = {{"n", n}, {"xi1", cjson(e.xi[0])}, {"xi2", cjson(e.xi[1])}, {"case", to_string(e.case_tag)}};
    }
    if (c.matrix.lambda.imag() == 0.0 && c.matrix.mu.imag() == 0.0) {
        const auto q = quasistatic_reference(c.matrix, c.modes.back());
        ctx.summary["quasistatic_reference"] = {q.first, q.second};
    }
    if (ctx.svg)
        write_line_svg(ctx.path("spectrum.svg"), "Re of the mode eigenvalues", "n", ns,
                       {{"Re xi1", r1}, {"Re xi2", r2}}, false);
}

void run_sweep(const YAML::Node& root, RunContext& ctx) {
    const SweepConfig c = parse_sweep(root);
    const std::vector<SweepRow> rows = sweep(c.spec);
    Csv csv(ctx.path("sweep.csv"), {"axis_value", "abs_psi11", "energy", "condition", "residual"});
    std::vector<double> x, y;
    int errors = 0;
    for (const auto& r : rows) {
        const double nan = std::nan("");
        if (!r.error.empty()) {
            ++errors;
            std::fprintf(stderr, "sweep: %s = %s: %s\n", to_string(c.spec.axis), num(r.axis_value).c_str(),
                         r.error.c_str());
            (csv << r.axis_value << nan << nan << nan << nan).end_row();
        } else {
            (csv << r.axis_value << r.abs_psi11 << r.energy << r.condition << r.residual).end_row();
        }
        x.push_back(r.axis_value);
        y.push_back(r.error.empty() ? r.abs_psi11 : nan);
    }
    ctx.summary["failed_points"] = errors;
    if (errors == int(rows.size())) throw NumericFailure("nocore_solver", "every sweep point failed");
    const PeakInfo p = locate_peak(c.spec, rows, c.refine);
    if (p.index < 0) throw NumericFailure("nocore_solver", "no peak located");
    ctx.summary["peak"] = {{"index", p.index},
                           {"axis_value", p.axis_value},
                           {"abs_psi11", p.value},
                           {"refined_axis_value", p.refined_axis_value},
                           {"refined_abs_psi11", p.refined_value},
                           {"median_abs_psi11", p.median}};
    std::printf("peak |psi11| = %s at %s = %s\n", num(p.refined_value).c_str(), to_string(c.spec.axis),
                num(p.refined_axis_value).c_str());
    if (ctx.svg)
        write_line_svg(ctx.path("sweep.svg"), "|psi11| along the sweep", to_string(c.spec.axis), x,
                       {{"|psi11|", y}}, true, c.spec.log_spaced);
}

namespace {

// Tunes when requested. A failed tune is reported but only fatal to the caller.
TuneResult prepare_calr(CalrConfig& c, RunContext& ctx) {
    TuneResult t;
    if (c.tune_p) {
        t = tune_p(c.cfg, c.tune);
        c.cfg.p_tune = t.p;
        ctx.summary["tune"] = {{"p", cjson(t.p)},
                               {"abs_det", t.abs_det},
                               {"median_abs_det", t.median_abs_det},
                               {"abs_det_at_zero", t.abs_det_at_zero},
                               {"ratio", t.ratio},
                               {"failed", t.failed},
                               {"diagnostic", t.diagnostic}};
    }
    return t;
}

}  // namespace

void run_field(const YAML::Node& root, RunContext& ctx) {
    FieldConfig c = parse_field(root);
    FieldModel m;
    switch (c.problem) {
        case FieldProblem::Single:
            m = single_potential_model(c.material, c.omega, c.R, c.n, c.density);
            break;
        case FieldProblem::Nocore: {
            std::vector<ModeSolution> sols;
            for (const auto& s : c.sources) {
                sols.push_back(solve_nocore_mode(c.nocore, s));
                if (sols.back().near_singular)
                    std::fprintf(stderr, "field: mode %d is near singular (cond %.3g)\n", s.n, sols.back().condition);
            }
            m = nocore_field_model(c.nocore, c.sources, sols);
            break;
        }
        case FieldProblem::Calr: {
            const TuneResult t = prepare_calr(c.calr, ctx);
            if (t.failed) throw NumericFailure("calr_solver", t.diagnostic);
            std::vector<CalrModeResult> sols;
            for (const auto& s : c.calr.sources) sols.push_back(solve_calr_mode(c.calr.cfg, s));
            m = calr_field_model(c.calr.cfg, c.calr.sources, sols);
            break;
        }
    }
    const GridConfig& g = c.grid;
    const std::vector<Point> pts =
        g.polar ? polar_grid(g.radii, g.n_theta) : cartesian_grid(g.xmin, g.xmax, g.ymin, g.ymax, g.nx, g.ny);
    const FieldGrid f = eval_total_field(m, pts, g.eps_rel);
    Csv csv(ctx.path("field.csv"), {"x", "y", "re_u1", "im_u1", "re_u2", "im_u2", "abs_u", "region"});
    std::vector<double> amp(pts.size());
    double peak = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec2c& u = f.values[i];
        const bool skip = f.tags[i] == RegionTag::Skipped;
        amp[i] = skip ? std::nan("") : u.norm();
        if (!skip && !std::isfinite(amp[i]))
            throw NumericFailure("field_eval", "non-finite field at point " + std::to_string(i));
        if (!skip) peak = std::max(peak, amp[i]);
        (csv << pts[i].x() << pts[i].y() << u(0).real() << u(0).imag() << u(1).real() << u(1).imag() << amp[i]
             << std::string(to_string(f.tags[i])))
            .end_row();
    }
    ctx.summary["points"] = pts.size();
    ctx.summary["max_abs_u"] = peak;
    // a lone potential jumps in traction by construction
    if (c.problem != FieldProblem::Single) record_residuals(m, ctx);
    write_profile(m, c.profile_radii, ctx);
    if (ctx.svg && !g.polar)
        write_heatmap_svg(ctx.path("field.svg"), "|u|", g.nx, g.ny, amp, g.xmin, g.xmax, g.ymin, g.ymax);
}

void run_calr(const YAML::Node& root, RunContext& ctx) {
    CalrConfig c = parse_calr(root);
    const TuneResult t = prepare_calr(c, ctx);
    std::vector<std::pair<double, double>> scan = t.scan;
    if (c.scan_csv && scan.empty()) scan = det_scan(c.cfg, c.tune.lo, c.tune.hi, c.tune.steps);
    if (c.scan_csv) {
        Csv csv(ctx.path("det_scan.csv"), {"p", "abs_det"});
        std::vector<double> x, y;
        for (const auto& [p, d] : scan) {
            (csv << p << d).end_row();
            x.push_back(p);
            y.push_back(d);
        }
        if (ctx.svg) write_line_svg(ctx.path("det_scan.svg"), "|det M| against p", "p", x, {{"|det M|", y}}, true);
    }
    if (t.failed) throw NumericFailure("calr_solver", t.diagnostic);

    const CalrReport r = calr_energy(c.cfg, c.sources, c.thresholds);
    json modes = json::array();
    for (const auto& m : r.modes)
        modes.push_back({{"n", m.n},
                         {"energy", m.energy},
                         {"residual", m.residual},
                         {"condition", m.condition},
                         {"near_singular", m.near_singular}});
    const json report = {{"det_m", cjson(r.det_m)},
                         {"abs_det", r.abs_det},
                         {"tuned_p", cjson(r.tuned_p)},
                         {"delta", c.cfg.delta},
                         {"critical_radius", r.critical_radius},
                         {"energy", r.energy},
                         {"exterior_bound", r.exterior_bound},
                         {"reference_bound", r.reference_bound},
                         {"verdict", to_string(r.verdict)},
                         {"modes", modes}};
    std::FILE* f = std::fopen(ctx.path("calr_report.json").c_str(), "w");
    if (!f) throw std::runtime_error("cannot write calr_report.json");
    std::fprintf(f, "%s\n", report.dump(2).c_str());
    std::fclose(f);
    ctx.summary["verdict"] = to_string(r.verdict);
    ctx.summary["energy"] = r.energy;
    std::printf("verdict %s, E = %s, exterior bound %s (reference %s)\n", to_string(r.verdict),
                num(r.energy).c_str(), num(r.exterior_bound).c_str(), num(r.reference_bound).c_str());
    for (const auto& m : r.modes)
        if (!std::isfinite(m.energy))
            throw NumericFailure("calr_solver", "non-finite energy in mode " + std::to_string(m.n));
}

namespace {

struct Check {
    std::string name;
    double value, limit;
};

double wronskian_residual() {
    double worst = 0.0;
    for (int i = 0; i <= 24; ++i)
        for (double a : {-1.2, 0.0, 0.7, 1.2}) {
            const cplx z = std::polar(std::pow(10.0, -2.0 + 4.0 * i / 24.0), a);
            for (int n = 0; n <= 60; ++n) {
                const CylPair p = cyl_pair(n, z);
                const double scale = std::max(2.0 / (kPi * std::abs(z)), std::abs(p.j * p.hp) + std::abs(p.jp * p.h));
                const cplx w = p.j * p.hp - p.jp * p.h - 2.0 * cplx(0, 1) / (kPi * z);
                worst = std::max(worst, std::abs(w) / scale);
            }
        }
    return worst;
}

double recurrence_residual() {
    double worst = 0.0;
    for (cplx z : {cplx(0.05, 0.0), cplx(1.3, 0.2), cplx(7.0, -0.4), cplx(30.0, 1.0)})
        for (const auto& v : {bessel_j_seq(61, z), hankel1_seq(61, z)})
            for (int n = 1; n <= 60; ++n) {
                const double s = std::max(std::abs(v[n - 1]), std::abs(v[n + 1]));
                worst = std::max(worst, std::abs(v[n - 1] + v[n + 1] - 2.0 * n / z * v[n]) / s);
            }
    return worst;
}

// Trapezoid rule on the circle is spectrally accurate away from it.
double scalar_quadrature_error() {
    double worst = 0.0;
    const int m = 2048;
    for (int n : {-3, 0, 2, 5})
        for (Point x : {Point(0.3, 0.2), Point(-0.5, 0.4), Point(1.4, -0.6), Point(0.0, 2.5)}) {
            const cplx k(1.7, 0.1);
            const double R = 1.0;
            cplx s = 0.0;
            for (int j = 0; j < m; ++j) {
                const double th = 2 * kPi * j / m;
                const Point y(R * std::cos(th), R * std::sin(th));
                s += -cplx(0, 0.25) * hankel1(0, k * (x - y).norm()) * std::exp(cplx(0, n * th));
            }
            s *= 2 * kPi * R / m;
            worst = std::max(worst, std::abs(s - scalar_slp_mode(k, R, n, x)));
        }
    return worst;
}

double traction_jump_error() {
    double worst = 0.0;
    const LameParams p{{1.2, 0.05}, 0.9};
    for (int n : {0, 1, 4, 12}) {
        const ModeMatrix d = traction_matrix(p, 1.3, 0.7, n, Limit::Exterior) -
                             traction_matrix(p, 1.3, 0.7, n, Limit::Interior) - ModeMatrix::Identity();
        worst = std::max(worst, d.cwiseAbs().maxCoeff());
    }
    return worst;
}

double transmission_error() {
    const LameParams unit{1.0, 1.0};
    const NocoreProblem pb{unit.scaled(cplx(-1.5, 0.1)), unit, 1.0, 1.0};
    const SourceModes src{{1, 1.0, 0.0}, {3, 0.5, 0.2}};
    std::vector<ModeSolution> sols;
    for (const auto& s : src) sols.push_back(solve_nocore_mode(pb, s));
    double worst = 0.0;
    for (const auto& t : transmission_residuals(nocore_field_model(pb, src, sols)))
        worst = std::max({worst, t.displacement, t.traction});
    return worst;
}

}  // namespace

bool run_selfcheck(RunContext& ctx) {
    const std::vector<Check> checks = {
        {"bessel_wronskian", wronskian_residual(), 1e-10},
        {"bessel_recurrence", recurrence_residual(), 1e-9},
        {"scalar_slp_quadrature", scalar_quadrature_error(), 1e-10},
        {"traction_jump", traction_jump_error(), 1e-13},
        {"transmission", transmission_error(), 1e-10},
    };
    bool all = true;
    json arr = json::array();
    for (const auto& c : checks) {
        const bool ok = c.value < c.limit;
        all = all && ok;
        std::printf("%-24s %s  %.3e (limit %.0e)\n", c.name.c_str(), ok ? "PASS" : "FAIL", c.value, c.limit);
        arr.push_back({{"name", c.name}, {"value", c.value}, {"limit", c.limit}, {"pass", ok}});
    }
    ctx.summary["checks"] = arr;
    return all;
}

}  // namespace cli
