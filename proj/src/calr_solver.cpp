#include "elres/calr_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "elres/util.hpp"

namespace elres {
namespace {

const cplx kI(0.0, 1.0);

// Two-parameter Nelder-Mead on f(x, y).
template <class F>
std::array<double, 2> nelder_mead(F f, std::array<double, 2> x0, double step, int iters) {
    std::array<std::array<double, 2>, 3> s = {x0, {x0[0] + step, x0[1]}, {x0[0], x0[1] + step}};
    std::array<double, 3> v;
    for (int i = 0; i < 3; ++i) v[i] = f(s[i][0], s[i][1]);
    for (int it = 0; it < iters; ++it) {
        std::array<int, 3> o = {0, 1, 2};
        std::sort(o.begin(), o.end(), [&](int a, int b) { return v[a] < v[b]; });
        const auto best = s[o[0]], mid = s[o[1]], worst = s[o[2]];
        const double fb = v[o[0]], fm = v[o[1]], fw = v[o[2]];
        const std::array<double, 2> c = {(best[0] + mid[0]) / 2, (best[1] + mid[1]) / 2};
        auto at = [&](double t) { return std::array<double, 2>{c[0] + t * (worst[0] - c[0]), c[1] + t * (worst[1] - c[1])}; };
        auto r = at(-1.0);
        double fr = f(r[0], r[1]);
        if (fr < fb) {
            auto e = at(-2.0);
            double fe = f(e[0], e[1]);
            if (fe < fr) { s[o[2]] = e; v[o[2]] = fe; } else { s[o[2]] = r; v[o[2]] = fr; }
        } else if (fr < fm) {
            s[o[2]] = r; v[o[2]] = fr;
        } else {
            auto k = at(fr < fw ? -0.5 : 0.5);
            double fk = f(k[0], k[1]);
            if (fk < std::min(fr, fw)) {
                s[o[2]] = k; v[o[2]] = fk;
            } else {
                for (int j : {o[1], o[2]}) {
                    s[j] = {(s[j][0] + best[0]) / 2, (s[j][1] + best[1]) / 2};
                    v[j] = f(s[j][0], s[j][1]);
                }
            }
        }
        const double span = std::max(std::abs(s[0][0] - s[1][0]) + std::abs(s[0][1] - s[1][1]),
                                     std::abs(s[0][0] - s[2][0]) + std::abs(s[0][1] - s[2][1]));
        if (span < 1e-15) break;
    }
    int b = int(std::min_element(v.begin(), v.end()) - v.begin());
    return s[b];
}

struct ShellFields {
    Vec2c ue, te, ui, ti;
};

ShellFields shell_boundary_fields(const CoreShellConfig& cfg, const LameParams& sh, int n, const Vector8c& phi) {
    const double ri = cfg.geo.r_i, re = cfg.geo.r_e, w = cfg.omega;
    const Vec2c p2 = phi.segment<2>(2), p3 = phi.segment<2>(4);
    ShellFields f;
    f.ue = slp_disp_matrix(sh, w, ri, n, re) * p2 + slp_disp_matrix(sh, w, re, n, re, Side::Inner) * p3;
    f.te = slp_trac_matrix(sh, w, ri, n, re) * p2 + slp_trac_matrix(sh, w, re, n, re, Side::Inner) * p3;
    f.ui = slp_disp_matrix(sh, w, ri, n, ri, Side::Outer) * p2 + slp_disp_matrix(sh, w, re, n, ri) * p3;
    f.ti = slp_trac_matrix(sh, w, ri, n, ri, Side::Outer) * p2 + slp_trac_matrix(sh, w, re, n, ri) * p3;
    return f;
}

}  // namespace

LameParams recipe_shell(const LameParams& matrix, double delta) {
    const cplx lam = matrix.lambda, mu = matrix.mu;
    const cplx mh = -(lam + mu) / (lam + 3.0 * mu) + kI * delta;
    return {lam * mh / mu, mh};
}

CoreShellConfig recipe_config(const AnnulusGeometry& geo, const LameParams& core, const LameParams& matrix,
                               double omega, int n0) {
    geo.validate();
    CoreShellConfig c;
    c.geo = geo;
    c.core = core;
    c.matrix = matrix;
    c.omega = omega;
    c.n0 = n0;
    c.delta = std::pow(geo.r_i / geo.r_e, n0);
    c.shell = recipe_shell(matrix, c.delta);
    return c;
}

LameParams shell_at(const CoreShellConfig& cfg, cplx p) {
    return {cfg.shell.lambda + p * cfg.matrix.lambda / cfg.matrix.mu, cfg.shell.mu + p};
}

Matrix8c assemble_calr_matrix(const CoreShellConfig& cfg, int n, cplx p) {
    cfg.geo.validate();
    const double ri = cfg.geo.r_i, re = cfg.geo.r_e, w = cfg.omega;
    const LameParams sh = shell_at(cfg, p);
    const TwoRadiusBlocks x = two_radius_coupling(sh, w, ri, re, n);
    Matrix8c M = Matrix8c::Zero();
    M.block<2, 2>(0, 0) = slp_disp_matrix(cfg.core, w, ri, n, ri, Side::Inner);
    M.block<2, 2>(0, 2) = -slp_disp_matrix(sh, w, ri, n, ri, Side::Outer);
    M.block<2, 2>(0, 4) = -x.r13;
    M.block<2, 2>(2, 0) = slp_trac_matrix(cfg.core, w, ri, n, ri, Side::Inner);
    M.block<2, 2>(2, 2) = -slp_trac_matrix(sh, w, ri, n, ri, Side::Outer);
    M.block<2, 2>(2, 4) = -x.r23;
    M.block<2, 2>(4, 2) = x.r32;
    M.block<2, 2>(4, 4) = slp_disp_matrix(sh, w, re, n, re, Side::Inner);
    M.block<2, 2>(4, 6) = -slp_disp_matrix(cfg.matrix, w, re, n, re, Side::Outer);
    M.block<2, 2>(6, 2) = x.r42;
    M.block<2, 2>(6, 4) = slp_trac_matrix(sh, w, re, n, re, Side::Inner);
    M.block<2, 2>(6, 6) = -slp_trac_matrix(cfg.matrix, w, re, n, re, Side::Outer);
    return M;
}

double abs_det(const CoreShellConfig& cfg, cplx p) {
    return std::abs(assemble_calr_matrix(cfg, cfg.n0, p).determinant());
}

std::vector<std::pair<double, double>> det_scan_serial(const CoreShellConfig& cfg, double lo, double hi, int steps) {
    std::vector<std::pair<double, double>> out(steps);
    for (int i = 0; i < steps; ++i) {
        const double p = steps == 1 ? lo : lo + (hi - lo) * i / double(steps - 1);
        out[i] = {p, abs_det(cfg, p)};
    }
    return out;
}

std::vector<std::pair<double, double>> det_scan(const CoreShellConfig& cfg, double lo, double hi, int steps) {
    std::vector<std::pair<double, double>> out(steps);
#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < steps; ++i) {
        const double p = steps == 1 ? lo : lo + (hi - lo) * i / double(steps - 1);
        out[i] = {p, abs_det(cfg, p)};
    }
    return out;
}

TuneResult tune_p(const CoreShellConfig& cfg, const TuneOptions& opt) {
    if (opt.steps < 3 || !(opt.hi > opt.lo)) throw std::invalid_argument("tune_p: need steps >= 3 and lo < hi");
    TuneResult r;
    r.scan = det_scan(cfg, opt.lo, opt.hi, opt.steps);
    std::vector<double> vals;
    vals.reserve(r.scan.size());
    int imin = 0;
    for (int i = 0; i < int(r.scan.size()); ++i) {
        vals.push_back(r.scan[i].second);
        if (r.scan[i].second < r.scan[imin].second) imin = i;
    }
    r.median_abs_det = median(vals);
    r.abs_det_at_zero = abs_det(cfg, 0.0);
    const int lo = std::max(imin - 1, 0), hi = std::min(imin + 1, int(r.scan.size()) - 1);
    const double p = golden_section_min([&](double x) { return abs_det(cfg, x); }, r.scan[lo].first,
                                        r.scan[hi].first, 200);
    r.p = p;
    r.abs_det = abs_det(cfg, p);
    if (r.scan[imin].second < r.abs_det) {
        r.p = r.scan[imin].first;
        r.abs_det = r.scan[imin].second;
    }
    if (opt.complex_refine) {
        const double scale = std::max(r.abs_det, 1e-300);
        auto f = [&](double x, double y) { return std::log(abs_det(cfg, cplx(x, y)) / scale); };
        const auto q = nelder_mead(f, {r.p.real(), 0.0}, 1e-3, 400);
        const cplx pc(q[0], q[1]);
        const double v = abs_det(cfg, pc);
        if (v < r.abs_det) {
            r.p = pc;
            r.abs_det = v;
        }
    }
    r.ratio = r.median_abs_det > 0.0 ? r.abs_det / r.median_abs_det : 0.0;
    if (!(r.ratio <= opt.fail_ratio)) {
        r.failed = true;
        r.diagnostic = "tuning failed: no dip in |det M| (min/median = " + std::to_string(r.ratio) + ")";
    }
    return r;
}

CalrModeResult solve_calr_mode(const CoreShellConfig& cfg, const SourceMode& s) {
    if (s.kappa2 != cplx(0.0)) throw std::invalid_argument("core-shell sources must be Q-type (kappa2 = 0)");
    CalrModeResult out;
    out.n = s.n;
    const Matrix8c M = assemble_calr_matrix(cfg, s.n);
    const BoundaryData bd = source_boundary_data(s, cfg.matrix, cfg.omega, cfg.geo.r_e);
    Vector8c rhs = Vector8c::Zero();
    rhs.segment<2>(4) = bd.f;
    rhs.segment<2>(6) = bd.ft;
    out.phi = Eigen::PartialPivLU<Matrix8c>(M).solve(rhs);
    out.residual = relative_residual(M, out.phi, rhs);
    out.condition = condition_number(M);
    out.near_singular = !(out.condition < kNearSingularCond);
    const ShellFields f = shell_boundary_fields(cfg, shell_at(cfg, cfg.p_tune), s.n, out.phi);
    const double twopi = 2.0 * std::numbers::pi;
    out.energy = twopi * (cfg.geo.r_e * f.ue.dot(f.te).imag() - cfg.geo.r_i * f.ui.dot(f.ti).imag());
    return out;
}

CalrReport calr_energy(const CoreShellConfig& cfg, const SourceModes& src, const CalrThresholds& thr) {
    CalrReport rep;
    rep.tuned_p = cfg.p_tune;
    rep.critical_radius = cfg.geo.critical_radius();
    rep.det_m = assemble_calr_matrix(cfg, cfg.n0).determinant();
    rep.abs_det = std::abs(rep.det_m);
    for (const auto& s : src) rep.modes.push_back(solve_calr_mode(cfg, s));
    for (const auto& m : rep.modes) rep.energy += m.energy;

    const double rb = cfg.geo.r_e * cfg.geo.r_e / cfg.geo.r_i;
    std::vector<Vec2c> total(thr.samples, Vec2c::Zero()), ref(thr.samples, Vec2c::Zero());
    for (std::size_t k = 0; k < src.size(); ++k) {
        const int n = src[k].n;
        const RadialField F = source_field(src[k], cfg.matrix, cfg.omega, cfg.geo.r_e, rb);
        const Vec2c us = slp_disp_matrix(cfg.matrix, cfg.omega, cfg.geo.r_e, n, rb) * rep.modes[k].phi.segment<2>(6);
        for (int j = 0; j < thr.samples; ++j) {
            const double th = 2.0 * std::numbers::pi * j / thr.samples;
            const Vec2c fc = to_cartesian(n, th, F.a, F.b);
            ref[j] += fc;
            total[j] += fc + to_cartesian(n, th, us(0), us(1));
        }
    }
    for (int j = 0; j < thr.samples; ++j) {
        rep.exterior_bound = std::max(rep.exterior_bound, total[j].norm());
        rep.reference_bound = std::max(rep.reference_bound, ref[j].norm());
    }
    const bool big = rep.energy >= thr.energy;
    const bool bounded = rep.exterior_bound <= thr.bound_factor * rep.reference_bound;
    rep.verdict = big ? (bounded ? Verdict::Calr : Verdict::ResonantOnly) : Verdict::NoResonance;
    return rep;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Calr: return "CALR";
        case Verdict::ResonantOnly: return "RESONANT_ONLY";
        case Verdict::NoResonance: return "NO_RESONANCE";
    }
    return "?";
}

}  // namespace elres
