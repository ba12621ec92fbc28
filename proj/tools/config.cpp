#include "config.hpp"

#include <cmath>
#include <sstream>

namespace cli {

using elres::cplx;

std::string ConfigError::located(const std::string& file) const {
    std::ostringstream os;
    os << file;
    if (line > 0) os << ":" << line << ":" << column;
    os << ": " << what();
    return os.str();
}

namespace {

[[noreturn]] void fail(const YAML::Node& at, const std::string& msg) {
    const YAML::Mark m = at.Mark();
    if (m.is_null()) throw ConfigError(msg, 0, 0);
    throw ConfigError(msg, m.line + 1, m.column + 1);
}

YAML::Node need(const YAML::Node& parent, const std::string& key, const std::string& path) {
    if (!parent.IsMap()) fail(parent, "'" + path + "' must be a mapping");
    YAML::Node v = parent[key];
    if (!v) fail(parent, "missing required key '" + (path.empty() ? key : path + "." + key) + "'");
    return v;
}

template <class T>
T as(const YAML::Node& n, const std::string& what) {
    try {
        return n.as<T>();
    } catch (const YAML::Exception&) {
        fail(n, "bad value for '" + what + "'");
    }
}

double real_of(const YAML::Node& n, const std::string& what) {
    const double v = as<double>(n, what);
    if (!std::isfinite(v)) fail(n, "'" + what + "' must be finite");
    return v;
}

// A complex number is a scalar or a two-element list [re, im].
cplx complex_of(const YAML::Node& n, const std::string& what) {
    if (n.IsSequence()) {
        if (n.size() != 2) fail(n, "'" + what + "' must be a number or [re, im]");
        return {real_of(n[0], what), real_of(n[1], what)};
    }
    return {real_of(n, what), 0.0};
}

double get_real(const YAML::Node& p, const std::string& key, const std::string& path, double dflt) {
    const YAML::Node v = p[key];
    return v ? real_of(v, path + key) : dflt;
}

int get_int(const YAML::Node& p, const std::string& key, const std::string& path, int dflt) {
    const YAML::Node v = p[key];
    return v ? as<int>(v, path + key) : dflt;
}

bool get_bool(const YAML::Node& p, const std::string& key, const std::string& path, bool dflt) {
    const YAML::Node v = p[key];
    return v ? as<bool>(v, path + key) : dflt;
}

elres::LameParams lame(const YAML::Node& materials, const std::string& name) {
    const std::string path = "materials." + name;
    const YAML::Node m = need(materials, name, "materials");
    return {complex_of(need(m, "lambda", path), path + ".lambda"), complex_of(need(m, "mu", path), path + ".mu")};
}

double omega_of(const YAML::Node& root) {
    const YAML::Node v = need(root, "omega", "");
    const double w = real_of(v, "omega");
    if (w <= 0.0) fail(v, "'omega' must be positive");
    return w;
}

double radius_of(const YAML::Node& root) {
    const YAML::Node v = need(need(root, "geometry", ""), "R", "geometry");
    const double r = real_of(v, "geometry.R");
    if (r <= 0.0) fail(v, "'geometry.R' must be positive");
    return r;
}

elres::AnnulusGeometry annulus_of(const YAML::Node& root) {
    const YAML::Node g = need(root, "geometry", "");
    const YAML::Node ri = need(g, "r_i", "geometry");
    elres::AnnulusGeometry a{real_of(ri, "geometry.r_i"), real_of(need(g, "r_e", "geometry"), "geometry.r_e")};
    try {
        a.validate();
    } catch (const std::exception& e) {
        fail(ri, std::string("bad annulus: ") + e.what());
    }
    return a;
}

std::pair<double, double> range_of(const YAML::Node& n, const std::string& what) {
    if (!n.IsSequence() || n.size() != 2) fail(n, "'" + what + "' must be [lo, hi]");
    const double lo = real_of(n[0], what), hi = real_of(n[1], what);
    if (!(lo < hi)) fail(n, "'" + what + "' is empty");
    return {lo, hi};
}

int steps_of(const YAML::Node& p, const std::string& path, int dflt) {
    const int s = get_int(p, "steps", path, dflt);
    if (s < 1) fail(p["steps"], "'" + path + "steps' must be at least 1");
    return s;
}

// [0, 1, 2] or {from: 0, to: 60}
std::vector<int> modes_of(const YAML::Node& n) {
    std::vector<int> out;
    if (n.IsSequence()) {
        for (const auto& e : n) out.push_back(as<int>(e, "modes"));
    } else if (n.IsMap()) {
        const int a = as<int>(need(n, "from", "modes"), "modes.from");
        const int b = as<int>(need(n, "to", "modes"), "modes.to");
        for (int k = a; k <= b; ++k) out.push_back(k);
    } else {
        fail(n, "'modes' must be a list or {from, to}");
    }
    if (out.empty()) fail(n, "'modes' is empty");
    return out;
}

elres::SourceMode source_of(const YAML::Node& n, const std::string& path) {
    elres::SourceMode s;
    s.n = as<int>(need(n, "n", path), path + ".n");
    if (n["kappa1"]) s.kappa1 = complex_of(n["kappa1"], path + ".kappa1");
    if (n["kappa2"]) s.kappa2 = complex_of(n["kappa2"], path + ".kappa2");
    if (s.n < 1) fail(n, "'" + path + ".n' must be at least 1");
    return s;
}

elres::SourceModes sources_of(const YAML::Node& n) {
    if (!n.IsSequence() || n.size() == 0) fail(n, "'sources' must be a nonempty list");
    elres::SourceModes out;
    for (std::size_t k = 0; k < n.size(); ++k) out.push_back(source_of(n[k], "sources[" + std::to_string(k) + "]"));
    return out;
}

GridConfig grid_of(const YAML::Node& root) {
    GridConfig g;
    const YAML::Node n = need(root, "grid", "");
    const std::string type = as<std::string>(need(n, "type", "grid"), "grid.type");
    g.eps_rel = get_real(n, "eps_rel", "grid.", g.eps_rel);
    if (type == "polar") {
        g.polar = true;
        const YAML::Node r = need(n, "radii", "grid");
        if (!r.IsSequence() || r.size() == 0) fail(r, "'grid.radii' must be a nonempty list");
        for (const auto& e : r) g.radii.push_back(real_of(e, "grid.radii"));
        g.n_theta = get_int(n, "n_theta", "grid.", g.n_theta);
        if (g.n_theta < 1) fail(n, "'grid.n_theta' must be at least 1");
    } else if (type == "cartesian") {
        std::tie(g.xmin, g.xmax) = range_of(need(n, "x", "grid"), "grid.x");
        std::tie(g.ymin, g.ymax) = range_of(need(n, "y", "grid"), "grid.y");
        g.nx = get_int(n, "nx", "grid.", g.nx);
        g.ny = get_int(n, "ny", "grid.", g.ny);
        if (g.nx < 1 || g.ny < 1) fail(n, "'grid.nx' and 'grid.ny' must be at least 1");
    } else {
        fail(n["type"], "'grid.type' must be polar or cartesian");
    }
    return g;
}

}  // namespace

YAML::Node load_file(const std::string& path) {
    try {
        YAML::Node n = YAML::LoadFile(path);
        if (!n.IsMap()) throw ConfigError("top level must be a mapping", 1, 1);
        return n;
    } catch (const YAML::BadFile&) {
        throw ConfigError("cannot open config file", 0, 0);
    } catch (const YAML::ParserException& e) {
        throw ConfigError(e.msg, e.mark.line + 1, e.mark.column + 1);
    }
}

SpectrumConfig parse_spectrum(const YAML::Node& root) {
    SpectrumConfig c;
    c.omega = omega_of(root);
    c.R = radius_of(root);
    c.matrix = lame(need(root, "materials", ""), "matrix");
    c.modes = modes_of(need(root, "modes", ""));
    c.tol = get_real(root, "tol", "", 0.0);
    return c;
}

SweepConfig parse_sweep(const YAML::Node& root) {
    SweepConfig c;
    elres::SweepSpec& s = c.spec;
    s.omega = omega_of(root);
    s.R = radius_of(root);
    s.matrix = lame(need(root, "materials", ""), "matrix");
    s.src = source_of(need(root, "source", ""), "source");
    const YAML::Node w = need(root, "sweep", "");
    const YAML::Node ax = need(w, "axis", "sweep");
    const std::string axis = as<std::string>(ax, "sweep.axis");
    if (axis == "re_c")
        s.axis = elres::SweepAxis::ReC;
    else if (axis == "im_c")
        s.axis = elres::SweepAxis::ImC;
    else
        fail(ax, "'sweep.axis' must be re_c or im_c");
    s.fixed = real_of(need(w, "fixed", "sweep"), "sweep.fixed");
    std::tie(s.lo, s.hi) = range_of(need(w, "range", "sweep"), "sweep.range");
    s.steps = steps_of(w, "sweep.", 601);
    s.log_spaced = get_bool(w, "log", "sweep.", false);
    if (s.log_spaced && s.lo <= 0.0) fail(w["range"], "'sweep.range' must be positive for a log sweep");
    c.refine = get_bool(w, "refine", "sweep.", true);
    return c;
}

CalrConfig parse_calr(const YAML::Node& root) {
    CalrConfig c;
    elres::CoreShellConfig& k = c.cfg;
    const double omega = omega_of(root);
    const elres::AnnulusGeometry geo = annulus_of(root);
    const YAML::Node mats = need(root, "materials", "");
    const YAML::Node n0 = need(root, "n0", "");
    const int order = as<int>(n0, "n0");
    if (order < 1) fail(n0, "'n0' must be at least 1");
    k = elres::recipe_config(geo, lame(mats, "core"), lame(mats, "matrix"), omega, order);
    if (root["delta"]) {
        k.delta = real_of(root["delta"], "delta");
        k.shell = elres::recipe_shell(k.matrix, k.delta);
    }
    if (mats["shell"]) k.shell = lame(mats, "shell");
    if (const YAML::Node p = root["p"]) {
        k.p_tune = complex_of(p, "p");
        c.tune_p = false;
    }
    if (const YAML::Node t = root["tune"]) {
        if (t["range"]) std::tie(c.tune.lo, c.tune.hi) = range_of(t["range"], "tune.range");
        c.tune.steps = steps_of(t, "tune.", c.tune.steps);
        if (c.tune.steps < 3) fail(t["steps"], "'tune.steps' must be at least 3");
        c.tune.complex_refine = get_bool(t, "complex", "tune.", false);
        c.tune.fail_ratio = get_real(t, "fail_ratio", "tune.", c.tune.fail_ratio);
    }
    c.sources = root["sources"] ? sources_of(root["sources"]) : elres::SourceModes{{order, 1.0, 0.0}};
    if (const YAML::Node s = root["sources"])
        for (std::size_t k = 0; k < s.size(); ++k)
            if (c.sources[k].kappa2 != cplx(0.0)) fail(s[k], "core-shell sources must have kappa2 = 0");
    if (const YAML::Node t = root["thresholds"]) {
        c.thresholds.energy = get_real(t, "energy", "thresholds.", c.thresholds.energy);
        c.thresholds.bound_factor = get_real(t, "bound_factor", "thresholds.", c.thresholds.bound_factor);
        c.thresholds.samples = get_int(t, "samples", "thresholds.", c.thresholds.samples);
    }
    c.scan_csv = get_bool(root, "det_scan", "", true);
    return c;
}

FieldConfig parse_field(const YAML::Node& root) {
    FieldConfig c;
    const YAML::Node pr = need(root, "problem", "");
    const std::string problem = as<std::string>(pr, "problem");
    if (problem == "single") {
        c.problem = FieldProblem::Single;
        c.omega = omega_of(root);
        c.R = radius_of(root);
        c.material = lame(need(root, "materials", ""), "matrix");
        const YAML::Node d = need(root, "density", "");
        c.n = as<int>(need(d, "n", "density"), "density.n");
        const std::string kind = as<std::string>(need(d, "kind", "density"), "density.kind");
        if (kind == "nu")
            c.density = elres::Density::Nu;
        else if (kind == "t")
            c.density = elres::Density::T;
        else
            fail(d["kind"], "'density.kind' must be nu or t");
    } else if (problem == "nocore") {
        c.problem = FieldProblem::Nocore;
        c.nocore.omega = c.omega = omega_of(root);
        c.nocore.R = radius_of(root);
        const YAML::Node mats = need(root, "materials", "");
        c.nocore.matrix = lame(mats, "matrix");
        if (root["contrast"])
            c.nocore.shell = c.nocore.matrix.scaled(complex_of(root["contrast"], "contrast"));
        else
            c.nocore.shell = lame(mats, "shell");
        c.sources = sources_of(need(root, "sources", ""));
    } else if (problem == "calr") {
        c.problem = FieldProblem::Calr;
        c.calr = parse_calr(root);
        c.omega = c.calr.cfg.omega;
    } else {
        fail(pr, "'problem' must be single, nocore or calr");
    }
    c.grid = grid_of(root);
    if (const YAML::Node p = root["profile"]) {
        if (!p.IsSequence()) fail(p, "'profile' must be a list of radii");
        for (const auto& e : p) c.profile_radii.push_back(real_of(e, "profile"));
    }
    return c;
}

}  // namespace cli
