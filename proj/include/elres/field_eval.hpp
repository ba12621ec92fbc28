#pragma once
// Total displacement fields on point sets, assembled region by region from
// solved densities.

#include <vector>

#include "elres/calr_solver.hpp"

namespace elres {

enum class RegionTag { Core, Shell, Exterior, Skipped };

struct PotentialTerm {
    LameParams params;
    double rho = 1.0;
    int n = 0;
    Vec2c density = Vec2c::Zero();
};

struct SourceTerm {
    SourceMode mode;
    LameParams matrix;
    double R = 1.0;  // normalization radius of the source expansion
};

struct Region {
    RegionTag tag = RegionTag::Exterior;
    double r_lo = 0.0, r_hi = INFINITY;
    std::vector<PotentialTerm> terms;
    std::vector<SourceTerm> sources;
    LameParams material;  // for tractions on the region's boundaries
};

struct FieldModel {
    double omega = 1.0;
    std::vector<Region> regions;  // ordered by radius, sharing interfaces
};

struct FieldGrid {
    std::vector<Point> points;
    std::vector<Vec2c> values;
    std::vector<RegionTag> tags;
};

FieldModel nocore_field_model(const NocoreProblem& pb, const SourceModes& src, const std::vector<ModeSolution>& sols);
FieldModel calr_field_model(const CoreShellConfig& cfg, const SourceModes& src,
                            const std::vector<CalrModeResult>& sols);
// S_{|y|=R}[e^{in theta} density] alone, on both sides of the circle.
FieldModel single_potential_model(const LameParams& p, double omega, double R, int n, Density d);

// Radial coefficients of one mode of region k at radius r (r may sit on its boundary).
RadialField region_mode_field(const FieldModel& m, int region, int n, double r);
Vec2c eval_in_region(const FieldModel& m, int region, const Point& x);

// Points within eps_rel * (interface radius) of an interface are skipped.
FieldGrid eval_total_field_serial(const FieldModel& m, const std::vector<Point>& pts, double eps_rel = 1e-6);
FieldGrid eval_total_field(const FieldModel& m, const std::vector<Point>& pts, double eps_rel = 1e-6);

struct ProfileRow {
    double r = 0.0;
    double max_amplitude = 0.0;
};
std::vector<ProfileRow> radial_profile(const FieldModel& m, const std::vector<double>& thetas,
                                       const std::vector<double>& radii);

// Jump of displacement and traction across every interior interface, sampled at
// `samples` angles and relative to the larger one-sided value.
struct InterfaceResidual {
    double radius = 0.0;
    double displacement = 0.0;
    double traction = 0.0;
};
std::vector<InterfaceResidual> transmission_residuals(const FieldModel& m, int samples = 64);

std::vector<Point> polar_grid(const std::vector<double>& radii, int n_theta);
std::vector<Point> cartesian_grid(double xmin, double xmax, double ymin, double ymax, int nx, int ny);

const char* to_string(RegionTag t);

}  // namespace elres
