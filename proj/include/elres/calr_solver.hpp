#pragma once
// Core-shell structure: 8x8 per-mode system, tuning of the shell parameter,
// and the energy / exterior-boundedness classification.

#include <string>
#include <utility>
#include <vector>

#include "elres/nocore_solver.hpp"

namespace elres {

using Matrix8c = Eigen::Matrix<cplx, 8, 8>;
using Vector8c = Eigen::Matrix<cplx, 8, 1>;

// `shell` is the shell at p = 0. The effective shell at correction p is
// mu^ + p, lambda^ + p lambda/mu (see shell_at).
struct CoreShellConfig {
    AnnulusGeometry geo;
    LameParams core;
    LameParams shell;
    LameParams matrix;
    double omega = 1.0;
    int n0 = 1;
    double delta = 0.0;
    cplx p_tune{};
};

// mu^ = -(lambda+mu)/(lambda+3mu) + i delta, lambda^ = lambda mu^/mu.
LameParams recipe_shell(const LameParams& matrix, double delta);
CoreShellConfig recipe_config(const AnnulusGeometry& geo, const LameParams& core, const LameParams& matrix,
                               double omega, int n0);
LameParams shell_at(const CoreShellConfig& cfg, cplx p);

Matrix8c assemble_calr_matrix(const CoreShellConfig& cfg, int n, cplx p);
inline Matrix8c assemble_calr_matrix(const CoreShellConfig& cfg, int n) {
    return assemble_calr_matrix(cfg, n, cfg.p_tune);
}

struct TuneOptions {
    double lo = -0.16, hi = 0.16;
    int steps = 641;
    bool complex_refine = false;
    double fail_ratio = 0.1;
};

struct TuneResult {
    cplx p{};
    double abs_det = 0.0;
    double median_abs_det = 0.0;
    double abs_det_at_zero = 0.0;
    double ratio = 0.0;  // abs_det / median_abs_det
    bool failed = false;
    std::string diagnostic;
    std::vector<std::pair<double, double>> scan;  // (p, |det M|)
};

double abs_det(const CoreShellConfig& cfg, cplx p);
std::vector<std::pair<double, double>> det_scan_serial(const CoreShellConfig& cfg, double lo, double hi, int steps);
std::vector<std::pair<double, double>> det_scan(const CoreShellConfig& cfg, double lo, double hi, int steps);
TuneResult tune_p(const CoreShellConfig& cfg, const TuneOptions& opt = {});

enum class Verdict { Calr, ResonantOnly, NoResonance };

struct CalrThresholds {
    double energy = 1e4;
    double bound_factor = 10.0;
    int samples = 128;
};

struct CalrModeResult {
    int n = 0;
    Vector8c phi = Vector8c::Zero();  // core (r_i), shell (r_i), shell (r_e), matrix (r_e)
    double residual = 0.0;
    double condition = 0.0;
    bool near_singular = false;
    double energy = 0.0;
};

struct CalrReport {
    cplx det_m{};
    double abs_det = 0.0;
    cplx tuned_p{};
    double critical_radius = 0.0;
    double energy = 0.0;
    double exterior_bound = 0.0;
    double reference_bound = 0.0;  // source alone on the same circle
    Verdict verdict = Verdict::NoResonance;
    std::vector<CalrModeResult> modes;
};

CalrModeResult solve_calr_mode(const CoreShellConfig& cfg, const SourceMode& s);
CalrReport calr_energy(const CoreShellConfig& cfg, const SourceModes& src, const CalrThresholds& thr = {});

const char* to_string(Verdict v);

}  // namespace elres
