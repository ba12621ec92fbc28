#pragma once
// Disk with no core: per-mode transmission system, energy and parameter sweeps.

#include <string>
#include <vector>

#include "elres/layer_potentials.hpp"

namespace elres {

using Matrix4c = Eigen::Matrix<cplx, 4, 4>;
using Vector4c = Eigen::Matrix<cplx, 4, 1>;

// F_n = kappa1 ks R/(n J_n(ks R)) Q_n + kappa2 kp R/(n J_n(kp R)) P_n (entire fields).
struct SourceMode {
    int n = 1;
    cplx kappa1{1.0, 0.0};
    cplx kappa2{0.0, 0.0};
};
using SourceModes = std::vector<SourceMode>;

struct BoundaryData {
    int n = 0;
    Vec2c f, ft;  // trace and traction of F_n at R
};

// Radial coefficients of F_n at radius r (matrix material).
RadialField source_field(const SourceMode& s, const LameParams& matrix, double omega, double R, double r);
BoundaryData source_boundary_data(const SourceMode& s, const LameParams& matrix, double omega, double R);

Matrix4c assemble_mode_system(const LameParams& p_in, const LameParams& p_out, double omega, double R, int n);

struct ModeSolution {
    int n = 0;
    Vec2c psi1 = Vec2c::Zero();  // density on the shell side
    Vec2c psi2 = Vec2c::Zero();  // density of the exterior potential
    double residual = 0.0;
    double condition = 0.0;
    bool near_singular = false;
    cplx closed_form_psi11{};    // Cramer's rule on the same blocks
};

inline constexpr double kNearSingularCond = 1e14;

ModeSolution solve_mode(const Matrix4c& A, const Vector4c& rhs, int n = 0);

struct NocoreProblem {
    LameParams shell;
    LameParams matrix;
    double omega = 1.0;
    double R = 1.0;
};

ModeSolution solve_nocore_mode(const NocoreProblem& pb, const SourceMode& s);

// Im of the boundary form of the shell field, summed over modes.
double mode_energy(const ModeSolution& sol, const LameParams& p_shell, double omega, double R);
double dissipation_energy(const std::vector<ModeSolution>& sols, const LameParams& p_shell, double omega,
                          double R);

enum class SweepAxis { ReC, ImC };

// Shell = c * matrix with c = x + i*fixed (ReC) or fixed + i*x (ImC).
struct SweepSpec {
    LameParams matrix;
    double omega = 1.0;
    double R = 1.0;
    SourceMode src;
    SweepAxis axis = SweepAxis::ReC;
    double fixed = 0.0;
    double lo = 0.0, hi = 1.0;
    int steps = 2;
    bool log_spaced = false;
};

struct SweepRow {
    double axis_value = 0.0;
    cplx c{};
    double abs_psi11 = 0.0;
    double energy = 0.0;
    double condition = 0.0;
    double residual = 0.0;
    std::string error;
};

double sweep_axis_value(const SweepSpec& s, int i);
cplx sweep_contrast(const SweepSpec& s, double x);
SweepRow sweep_point(const SweepSpec& s, double x);

std::vector<SweepRow> sweep_serial(const SweepSpec& s);
std::vector<SweepRow> sweep(const SweepSpec& s);  // OpenMP, same row order

struct PeakInfo {
    int index = -1;
    double axis_value = 0.0;
    double value = 0.0;
    double refined_axis_value = 0.0;
    double refined_value = 0.0;
    double median = 0.0;
};

// Grid maximum of |psi_11|; with refine, golden-section search between the neighbours.
PeakInfo locate_peak(const SweepSpec& s, const std::vector<SweepRow>& rows, bool refine = true);

const char* to_string(SweepAxis a);

}  // namespace elres
