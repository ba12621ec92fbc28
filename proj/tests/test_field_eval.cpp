#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"

using namespace elres;
using oracle::PI;

namespace {

const LameParams kUnit{1.0, 1.0};

std::vector<double> thetas(int m) {
    std::vector<double> t;
    for (int j = 0; j < m; ++j) t.push_back(2 * PI * j / m);
    return t;
}

double amp(const FieldModel& m, double r) { return radial_profile(m, thetas(16), {r})[0].max_amplitude; }

}  // namespace

TEST(FieldGrid, RegionTagsAndSkippedTube) {
    const FieldModel m = single_potential_model(kUnit, 1.0, 1.0, 2, Density::Nu);
    const FieldGrid g = eval_total_field(m, {Point(0.5, 0.0), Point(1.0 + 1e-8, 0.0), Point(0.0, 2.0)});
    EXPECT_EQ(g.tags[0], RegionTag::Shell);
    EXPECT_EQ(g.tags[1], RegionTag::Skipped);
    EXPECT_EQ(g.tags[2], RegionTag::Exterior);
    EXPECT_EQ(g.values[1], Vec2c::Zero());
    for (const auto& v : g.values) EXPECT_TRUE(std::isfinite(v.norm()));
}

TEST(FieldGrid, SinglePotentialMatchesDirectEvaluation) {
    const FieldModel m = single_potential_model(kUnit, 1.3, 1.0, 3, Density::T);
    for (Point x : {Point(0.3, 0.4), Point(-1.2, 0.9)}) {
        const Vec2c a = eval_total_field_serial(m, {x}).values[0];
        EXPECT_LT((a - vector_slp_eval(kUnit, 1.3, 1.0, 3, Density::T, x)).norm(), 1e-14);
    }
}

TEST(FieldGrid, GridBuilders) {
    const auto p = polar_grid({1.0, 2.0}, 4);
    ASSERT_EQ(p.size(), 8u);
    EXPECT_NEAR(p[5].y(), 2.0, 1e-15);
    const auto c = cartesian_grid(-1.0, 1.0, 0.0, 2.0, 3, 2);
    ASSERT_EQ(c.size(), 6u);
    EXPECT_EQ(c[4], Point(0.0, 2.0));
}

TEST(Profile, RadiatingModeDecaysLikeInverseRootR) {
    // outgoing field of real wavenumber: |u| sqrt(r) stays bounded
    const FieldModel m = single_potential_model(kUnit, 3.0, 1.0, 2, Density::Nu);
    double lo = INFINITY, hi = 0.0;
    for (double r : {5.0, 10.0, 20.0, 40.0, 80.0}) {
        const double a = amp(m, r) * std::sqrt(r);
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    EXPECT_LT(hi / lo, 1.5);
}

TEST(Profile, InteriorQFieldEnvelope) {
    FieldModel m;
    m.omega = 1.0;
    const SourceMode s{3, 1.0, 0.0};
    m.regions = {Region{RegionTag::Shell, 0.0, INFINITY, {}, {{s, kUnit, 1.0}}, kUnit}};
    const Wavenumbers w = wavenumbers(kUnit, 1.0);
    const cplx norm = w.ks / (3.0 * bessel_j(3, w.ks));
    for (double r : {0.2, 0.6, 0.9}) {
        const RadialField q = basis_field(WaveKind::Q, Radial::J, 3, w.ks, r);
        // |e^{in theta}(a nu + b t)| is independent of theta
        const double env = std::abs(norm) * std::sqrt(std::norm(q.a) + std::norm(q.b));
        EXPECT_NEAR(amp(m, r), env, 1e-13 * env);
    }
}

TEST(Profile, LocalizationPatterns) {
    const FieldModel hi = single_potential_model(kUnit, 20.0, 1.0, 5, Density::Nu);
    const FieldModel lo = single_potential_model(kUnit, 0.1, 1.0, 5, Density::Nu);
    // high frequency: interior field is not concentrated at the boundary
    EXPECT_LE(amp(hi, 0.95) / amp(hi, 0.3), 3.0);
    // outgoing waves still decay away from the circle
    EXPECT_GT(amp(hi, 1.05), amp(hi, 2.5));
    // low frequency: both sides concentrate at the boundary
    EXPECT_GE(amp(lo, 0.95) / amp(lo, 0.3), 10.0);
    EXPECT_GE(amp(lo, 1.05) / amp(lo, 2.5), 10.0);
}

TEST(FieldModelCalr, ContinuityAndPde) {
    CoreShellConfig c = recipe_config({0.8, 1.0}, kUnit, kUnit, 2.0, 6);
    c.p_tune = 0.05;
    const SourceModes src{{6, 1.0, 0.0}, {3, 0.4, 0.0}};
    std::vector<CalrModeResult> sols;
    for (const auto& s : src) sols.push_back(solve_calr_mode(c, s));
    const FieldModel m = calr_field_model(c, src, sols);
    const auto res = transmission_residuals(m);
    ASSERT_EQ(res.size(), 2u);
    for (const auto& t : res) {
        EXPECT_LT(t.displacement, 1e-10);
        EXPECT_LT(t.traction, 1e-10);
    }
    // one-sided limits at 64 angles
    for (double b : {0.8, 1.0})
        for (int j = 0; j < 64; ++j) {
            const double th = 2 * PI * j / 64;
            const Point in((b - 1e-12) * std::cos(th), (b - 1e-12) * std::sin(th));
            const Point out((b + 1e-12) * std::cos(th), (b + 1e-12) * std::sin(th));
            const Vec2c a = eval_total_field_serial(m, {in}, 0.0).values[0];
            const Vec2c d = eval_total_field_serial(m, {out}, 0.0).values[0];
            EXPECT_LT((a - d).norm(), 1e-8 * std::max(1.0, a.norm()));
        }
    std::mt19937 g(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const LameParams mats[3] = {c.core, shell_at(c, c.p_tune), c.matrix};
    const double r_lo[3] = {0.1, 0.83, 1.05}, r_hi[3] = {0.75, 0.97, 2.0};
    for (int k = 0; k < 3; ++k)
        for (int t = 0; t < 4; ++t) {
            const double r = r_lo[k] + (r_hi[k] - r_lo[k]) * u(g), th = 2 * PI * u(g);
            const Point x(r * std::cos(th), r * std::sin(th));
            oracle::Field f = [&](const Point& y) { return eval_in_region(m, k, y); };
            const oracle::PdeCheck pc = oracle::pde_check(mats[k], c.omega, f, x, 1e-3);
            EXPECT_LT(pc.rel, 1e-3) << k;
            EXPECT_LT(pc.ratio, 0.3) << k;
        }
}
