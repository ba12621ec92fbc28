#include <gtest/gtest.h>

#include <cmath>
#include <iostream>

#include "oracles.hpp"

using namespace elres;

namespace {

const LameParams kUnit{1.0, 1.0};
const AnnulusGeometry kGeo{0.8, 1.0};

CoreShellConfig base_config() { return recipe_config(kGeo, kUnit, kUnit, 5.0, 25); }

// Tuning is shared across tests; the 641-point scan costs a few hundred ms.
const TuneResult& base_tune() {
    static const TuneResult r = tune_p(base_config());
    return r;
}

}  // namespace

TEST(CalrConfig, RecipeAndCriticalRadius) {
    const CoreShellConfig c = base_config();
    EXPECT_NEAR(c.delta, std::pow(0.8, 25), 1e-18);
    EXPECT_NEAR(std::abs(c.shell.mu - cplx(-0.5, c.delta)), 0.0, 1e-15);
    EXPECT_EQ(c.shell.lambda, c.shell.mu);
    EXPECT_NEAR(kGeo.critical_radius(), 1.118033988749895, 1e-15);
    const LameParams s = shell_at(c, 0.02);
    EXPECT_NEAR(std::abs(s.mu - cplx(-0.48, c.delta)), 0.0, 1e-15);
    EXPECT_THROW(recipe_config({1.0, 0.8}, kUnit, kUnit, 5.0, 25), std::domain_error);
}

TEST(CalrMatrix, OuterRowsReduceToNocoreSystem) {
    const CoreShellConfig c = base_config();
    for (int n : {3, 25}) {
        const Matrix8c M = assemble_calr_matrix(c, n, 0.01);
        const Matrix4c A = assemble_mode_system(shell_at(c, 0.01), c.matrix, c.omega, kGeo.r_e, n);
        const Matrix4c B = M.block<4, 4>(4, 4);
        EXPECT_LT((A - B).cwiseAbs().maxCoeff(), 1e-15 * A.cwiseAbs().maxCoeff());
        EXPECT_TRUE((M.block<4, 2>(4, 0).isZero(0.0)));
        EXPECT_TRUE((M.block<4, 2>(0, 6).isZero(0.0)));
    }
}

TEST(CalrSolve, ZeroContrastHasNoScatteredField) {
    CoreShellConfig c;
    c.geo = kGeo;
    c.core = c.shell = c.matrix = kUnit;
    c.omega = 2.0;
    c.n0 = 4;
    const SourceMode s{4, 1.0, 0.0};
    const CalrModeResult r = solve_calr_mode(c, s);
    EXPECT_LT(r.phi.segment<2>(6).norm(), 1e-10 * r.phi.norm());
    EXPECT_LT(r.residual, 1e-11);
    const FieldModel m = calr_field_model(c, {s}, {r});
    for (const auto& t : transmission_residuals(m)) {
        EXPECT_LT(t.displacement, 1e-10);
        EXPECT_LT(t.traction, 1e-10);
    }
    for (Point x : {Point(0.2, 0.3), Point(0.85, 0.1), Point(-1.5, 0.4)}) {
        const RadialField f = source_field(s, kUnit, 2.0, 1.0, x.norm());
        const Vec2c F = to_cartesian(4, std::atan2(x.y(), x.x()), f.a, f.b);
        EXPECT_LT((eval_total_field_serial(m, {x}).values[0] - F).norm(), 1e-9 * F.norm());
    }
}

TEST(CalrSolve, RejectsPressureSources) {
    EXPECT_THROW(solve_calr_mode(base_config(), {25, 1.0, 0.5}), std::invalid_argument);
}

TEST(CalrTune, DeterminantDipNearZero) {
    const TuneResult& r = base_tune();
    EXPECT_FALSE(r.failed) << r.diagnostic;
    EXPECT_LE(std::abs(r.p), 0.16);
    EXPECT_LT(r.ratio, 0.05);
    EXPECT_LT(r.abs_det, 0.5 * r.abs_det_at_zero);
    EXPECT_EQ(int(r.scan.size()), 641);
}

TEST(CalrTune, ComplexRefinementReachesTheZero) {
    TuneOptions o;
    o.complex_refine = true;
    const TuneResult r = tune_p(base_config(), o);
    EXPECT_LT(r.ratio, 1e-8);
    // the zero sits where the effective shear modulus is real
    EXPECT_NEAR(r.p.imag(), -base_config().delta, 1e-6);
}

TEST(CalrTune, RegularShellFails) {
    CoreShellConfig c = base_config();
    c.shell = {2.0, 2.0};
    const TuneResult r = tune_p(c);
    EXPECT_TRUE(r.failed);
    EXPECT_FALSE(r.diagnostic.empty());
}

TEST(CalrTune, InvariantUnderScaling) {
    CoreShellConfig c = base_config();
    c.geo = {1.6, 2.0};
    c.omega = 2.5;
    const TuneResult r = tune_p(c);
    EXPECT_NEAR(r.p.real(), base_tune().p.real(), 1e-6);
}

TEST(CalrEnergy, InsideBranchResonatesAndStaysBounded) {
    CoreShellConfig c = base_config();
    c.p_tune = base_tune().p;
    const CalrReport rep = calr_energy(c, {{25, 1.0, 0.0}});
    EXPECT_GE(rep.energy, std::pow(1.25, 25) / 10.0);
    EXPECT_GE(rep.energy, 1e4);
    EXPECT_LE(rep.exterior_bound, 10.0 * rep.reference_bound);
    EXPECT_EQ(rep.verdict, Verdict::Calr);
    EXPECT_LT(rep.modes[0].residual, 1e-11);
    for (const auto& t : transmission_residuals(calr_field_model(c, {{25, 1.0, 0.0}}, rep.modes))) {
        EXPECT_LT(t.displacement, 1e-10);
        EXPECT_LT(t.traction, 1e-10);
    }
}

TEST(CalrEnergy, OutsideBranchPartialSumsConverge) {
    CoreShellConfig c = base_config();
    c.p_tune = base_tune().p;
    const double q = kGeo.r_e / (kGeo.critical_radius() + 0.1);
    SourceModes src;
    std::vector<double> partial;
    for (int n = 25; n <= 45; ++n) {
        src.push_back({n, std::pow(q, n), 0.0});
        partial.push_back(calr_energy(c, src).energy);
    }
    for (std::size_t k = 1; k < partial.size(); ++k) EXPECT_GE(partial[k], partial[k - 1] * (1.0 - 1e-12));
    // ten more modes change the n = 25..35 total by a few percent
    EXPECT_LT(partial.back(), 1.1 * partial[10]);
    EXPECT_LT(partial.back(), 1e3);
    const double d1 = partial[19] - partial[18], d2 = partial[20] - partial[19];
    EXPECT_LT(d2, 0.8 * d1);
}

TEST(CalrEnergy, HeavyLossKillsResonance) {
    CoreShellConfig c = base_config();
    c.delta = 50.0;
    c.shell = recipe_shell(kUnit, 50.0);
    const CalrReport rep = calr_energy(c, {{25, 1.0, 0.0}});
    EXPECT_TRUE(std::isfinite(rep.energy));
    EXPECT_EQ(rep.verdict, Verdict::NoResonance);
}

TEST(CalrEnergy, DensityGrowthAcrossOrders) {
    // |phi_3|, |phi_4| ~ n0 rho^{-n0} at the tuned configuration. The predicted
    // |phi_2|/|phi_4| ~ n0 is not observed with real p; logged only.
    std::vector<double> p3, p4, ratio;
    for (int n0 : {15, 20, 25}) {
        CoreShellConfig c = recipe_config(kGeo, kUnit, kUnit, 5.0, n0);
        TuneOptions o;
        o.lo = -4.0 / n0;
        o.hi = 4.0 / n0;
        c.p_tune = tune_p(c, o).p;
        const CalrModeResult r = solve_calr_mode(c, {n0, 1.0, 0.0});
        p3.push_back(r.phi.segment<2>(4).norm());
        p4.push_back(r.phi.segment<2>(6).norm());
        ratio.push_back(r.phi.segment<2>(2).norm() / p4.back());
        std::cout << "[ density ratio ] n0=" << n0 << " |phi2|/|phi4|=" << ratio.back() << "\n";
    }
    const int n0[] = {15, 20, 25};
    for (std::size_t k = 1; k < p4.size(); ++k) {
        const double expect = std::pow(1.25, 5) * n0[k] / double(n0[k - 1]);
        for (double g : {p3[k] / p3[k - 1], p4[k] / p4[k - 1]}) {
            EXPECT_GT(g, expect / 3.0) << k;
            EXPECT_LT(g, expect * 3.0) << k;
        }
    }
}
