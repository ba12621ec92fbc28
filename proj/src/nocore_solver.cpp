#include "elres/nocore_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "elres/specfun.hpp"
#include "elres/util.hpp"

namespace elres {
namespace {

cplx normalization(int n, cplx kR) {
    const cplx j = bessel_j(n, kR);
    if (n == 0) throw std::domain_error("source mode n = 0 cannot be normalized");
    if (std::abs(j) < 1e-300) throw std::domain_error("source normalization singular: J_n(kR) = 0");
    return kR / (double(n) * j);
}

}  // namespace

RadialField source_field(const SourceMode& s, const LameParams& matrix, double omega, double R, double r) {
    const Wavenumbers w = wavenumbers(matrix, omega);
    RadialField f;
    if (s.kappa1 != cplx(0.0))
        f += (s.kappa1 * normalization(s.n, w.ks * R)) * basis_field(WaveKind::Q, Radial::J, s.n, w.ks, r);
    if (s.kappa2 != cplx(0.0))
        f += (s.kappa2 * normalization(s.n, w.kp * R)) * basis_field(WaveKind::P, Radial::J, s.n, w.kp, r);
    return f;
}

BoundaryData source_boundary_data(const SourceMode& s, const LameParams& matrix, double omega, double R) {
    const RadialField f = source_field(s, matrix, omega, R, R);
    return {s.n, f.trace(), traction(matrix, s.n, R, f)};
}

Matrix4c assemble_mode_system(const LameParams& p_in, const LameParams& p_out, double omega, double R, int n) {
    Matrix4c A;
    A.block<2, 2>(0, 0) = slp_disp_matrix(p_in, omega, R, n, R, Side::Inner);
    A.block<2, 2>(0, 2) = -slp_disp_matrix(p_out, omega, R, n, R, Side::Outer);
    A.block<2, 2>(2, 0) = slp_trac_matrix(p_in, omega, R, n, R, Side::Inner);
    A.block<2, 2>(2, 2) = -slp_trac_matrix(p_out, omega, R, n, R, Side::Outer);
    return A;
}

ModeSolution solve_mode(const Matrix4c& A, const Vector4c& rhs, int n) {
    ModeSolution s;
    s.n = n;
    const Eigen::PartialPivLU<Matrix4c> lu(A);
    const Vector4c x = lu.solve(rhs);
    s.psi1 = x.head<2>();
    s.psi2 = x.tail<2>();
    s.residual = relative_residual(A, x, rhs);
    s.condition = condition_number(A);
    s.near_singular = !(s.condition < kNearSingularCond);
    Matrix4c A1 = A;
    A1.col(0) = rhs;
    s.closed_form_psi11 = A1.determinant() / A.determinant();
    return s;
}

ModeSolution solve_nocore_mode(const NocoreProblem& pb, const SourceMode& src) {
    const Matrix4c A = assemble_mode_system(pb.shell, pb.matrix, pb.omega, pb.R, src.n);
    const BoundaryData bd = source_boundary_data(src, pb.matrix, pb.omega, pb.R);
    Vector4c rhs;
    rhs << bd.f, bd.ft;
    return solve_mode(A, rhs, src.n);
}

double mode_energy(const ModeSolution& sol, const LameParams& p_shell, double omega, double R) {
    const Vec2c u = slp_disp_matrix(p_shell, omega, R, sol.n, R, Side::Inner) * sol.psi1;
    const Vec2c t = slp_trac_matrix(p_shell, omega, R, sol.n, R, Side::Inner) * sol.psi1;
    return 2.0 * std::numbers::pi * R * u.dot(t).imag();
}

double dissipation_energy(const std::vector<ModeSolution>& sols, const LameParams& p_shell, double omega,
                          double R) {
    double e = 0.0;
    for (const auto& s : sols) e += mode_energy(s, p_shell, omega, R);
    return e;
}

double sweep_axis_value(const SweepSpec& s, int i) {
    if (s.steps == 1) return s.lo;
    const double t = double(i) / double(s.steps - 1);
    if (s.log_spaced) return std::exp(std::log(s.lo) + t * (std::log(s.hi) - std::log(s.lo)));
    return s.lo + t * (s.hi - s.lo);
}

cplx sweep_contrast(const SweepSpec& s, double x) {
    return s.axis == SweepAxis::ReC ? cplx(x, s.fixed) : cplx(s.fixed, x);
}

SweepRow sweep_point(const SweepSpec& s, double x) {
    SweepRow row;
    row.axis_value = x;
    row.c = sweep_contrast(s, x);
    try {
        const NocoreProblem pb{s.matrix.scaled(row.c), s.matrix, s.omega, s.R};
        const ModeSolution sol = solve_nocore_mode(pb, s.src);
        row.abs_psi11 = std::abs(sol.psi1(0));
        row.energy = mode_energy(sol, pb.shell, s.omega, s.R);
        row.condition = sol.condition;
        row.residual = sol.residual;
    } catch (const std::exception& e) {
        row.error = e.what();
        row.abs_psi11 = row.energy = row.condition = row.residual = std::nan("");
    }
    return row;
}

static void check_spec(const SweepSpec& s) {
    if (s.steps < 1) throw std::invalid_argument("sweep: steps must be >= 1");
    if (s.log_spaced && !(s.lo > 0.0 && s.hi > 0.0)) throw std::invalid_argument("sweep: log axis needs positive range");
}

std::vector<SweepRow> sweep_serial(const SweepSpec& s) {
    check_spec(s);
    std::vector<SweepRow> rows(s.steps);
    for (int i = 0; i < s.steps; ++i) rows[i] = sweep_point(s, sweep_axis_value(s, i));
    return rows;
}

std::vector<SweepRow> sweep(const SweepSpec& s) {
    check_spec(s);
    std::vector<SweepRow> rows(s.steps);
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < s.steps; ++i) rows[i] = sweep_point(s, sweep_axis_value(s, i));
    return rows;
}

PeakInfo locate_peak(const SweepSpec& s, const std::vector<SweepRow>& rows, bool refine) {
    PeakInfo p;
    std::vector<double> vals;
    for (int i = 0; i < int(rows.size()); ++i) {
        const double v = rows[i].abs_psi11;
        if (!std::isfinite(v)) continue;
        vals.push_back(v);
        if (p.index < 0 || v > p.value) {
            p.index = i;
            p.value = v;
        }
    }
    if (p.index < 0) return p;
    p.median = median(vals);
    p.axis_value = rows[p.index].axis_value;
    p.refined_axis_value = p.axis_value;
    p.refined_value = p.value;
    if (!refine || rows.size() < 3) return p;
    const int lo = std::max(p.index - 1, 0), hi = std::min(p.index + 1, int(rows.size()) - 1);
    // log axes are refined in log coordinates
    auto to_u = [&](double x) { return s.log_spaced ? std::log(x) : x; };
    auto from_u = [&](double u) { return s.log_spaced ? std::exp(u) : u; };
    auto f = [&](double u) {
        const double v = sweep_point(s, from_u(u)).abs_psi11;
        return std::isfinite(v) ? -v : 0.0;
    };
    const double u = golden_section_min(f, to_u(rows[lo].axis_value), to_u(rows[hi].axis_value), 200);
    const double v = -f(u);
    if (v > p.value) {
        p.refined_axis_value = from_u(u);
        p.refined_value = v;
    }
    return p;
}

const char* to_string(SweepAxis a) { return a == SweepAxis::ReC ? "re_c" : "im_c"; }

}  // namespace elres
