#pragma once
// YAML run configuration. Every accessor reports missing keys and bad values
// with the line/column of the offending node.

#include <stdexcept>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "elres/elres.hpp"

namespace cli {

struct ConfigError : std::runtime_error {
    int line = 0, column = 0;  // 1-based; 0 when unknown
    ConfigError(const std::string& msg, int l, int c) : std::runtime_error(msg), line(l), column(c) {}
    std::string located(const std::string& file) const;
};

struct SpectrumConfig {
    elres::LameParams matrix;
    double omega = 1.0, R = 1.0;
    std::vector<int> modes;
    double tol = 0.0;
};

struct SweepConfig {
    elres::SweepSpec spec;
    bool refine = true;
};

enum class FieldProblem { Single, Nocore, Calr };

struct GridConfig {
    bool polar = false;
    std::vector<double> radii;
    int n_theta = 64;
    double xmin = -2, xmax = 2, ymin = -2, ymax = 2;
    int nx = 101, ny = 101;
    double eps_rel = 1e-6;
};

struct CalrConfig {
    elres::CoreShellConfig cfg;
    elres::TuneOptions tune;
    bool tune_p = true;  // false: use cfg.p_tune as given
    elres::SourceModes sources;
    elres::CalrThresholds thresholds;
    bool scan_csv = true;
};

struct FieldConfig {
    FieldProblem problem = FieldProblem::Single;
    // single
    elres::LameParams material;
    double omega = 1.0, R = 1.0;
    int n = 1;
    elres::Density density = elres::Density::Nu;
    // nocore
    elres::NocoreProblem nocore;
    elres::SourceModes sources;
    // calr
    CalrConfig calr;
    GridConfig grid;
    std::vector<double> profile_radii;
};

// Loaders throw ConfigError.
YAML::Node load_file(const std::string& path);
SpectrumConfig parse_spectrum(const YAML::Node& root);
SweepConfig parse_sweep(const YAML::Node& root);
FieldConfig parse_field(const YAML::Node& root);
CalrConfig parse_calr(const YAML::Node& root);

}  // namespace cli
