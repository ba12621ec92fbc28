#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"

using namespace elres;
using oracle::I;
using oracle::PI;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

std::vector<cplx> sample_grid() {
    std::vector<cplx> zs;
    for (int i = 0; i <= 32; ++i) {
        const double mag = std::pow(10.0, -2.0 + 4.0 * i / 32.0);
        for (double ang : {-1.2, 0.0, 0.7, 1.2}) zs.push_back(std::polar(mag, ang));
    }
    return zs;
}

struct Frozen {
    int n;
    cplx z, j, h;
};

// 80-digit reference values.
const Frozen kFrozen[] = {
    {0, {2.5, 0.0}, {-0.048383776468198, 0.0}, {-0.048383776468198, 0.4980703596152319}},
    {1, {0.3, 0.1}, {0.14887469828650735, 0.04838321584723999}, {-0.4645757444926201, -2.0383406456802886}},
    {5, {3.0, -0.2}, {0.0418979624500193, -0.012043288679852075}, {0.4818190826638454, -1.8366972101313908}},
    {10, {12.0, 4.0}, {1.567969789796557, 0.5171110799029577}, {0.011161190482390199, -0.016059721424810814}},
    {25, {5.0, 0.0}, {4.497660684134054e-16, 0.0}, {4.497660684134054e-16, -28893737198730.074}},
    {40, {30.0, -10.0}, {-0.005933824688023785, -0.005258937727945804}, {1.0867866807516715, 0.6235944261347002}},
    {7, {-4.0, 1.0}, {-0.00233505799377076, 0.01933706967830952}, {-2.6856090790691884, 0.6745893577443942}},
    {3, {-2.0, -3.0}, {0.8663250261534319, -1.078786775258142}, {1.7831701851459807, -2.1748770894470932}},
    {60, {100.0, 0.0}, {0.0010631563042277031, 0.0}, {0.0010631563042277031, -0.08919469415037778}},
    {2, {0.5, 70.0}, {-1.0264539847148807e+29, 5.562613944461752e+28}, {-1.8793963272786333e-32, 3.409677874112629e-32}},
};

}  // namespace

TEST(Specfun, TrivialValuesAtZero) {
    EXPECT_EQ(bessel_j(0, 0.0), cplx(1.0));
    EXPECT_EQ(bessel_j(3, 0.0), cplx(0.0));
    EXPECT_THROW(hankel1(0, 0.0), std::domain_error);
}

TEST(Specfun, RejectsNonFiniteAndHugeOrder) {
    EXPECT_THROW(bessel_j(1, cplx(NAN, 0.0)), std::domain_error);
    EXPECT_THROW(bessel_j(1, cplx(INFINITY, 0.0)), std::domain_error);
    EXPECT_THROW(bessel_j(kMaxOrder + 1, 1.0), std::domain_error);
}

TEST(Specfun, MatchesExtendedPrecisionSeries) {
    EXPECT_LT(rel(bessel_j(5, {2.0, 0.5}), oracle::bessel_j_series(5, {2.0, 0.5})), 1e-14);
    for (int n : {0, 1, 3, 8, 15})
        for (cplx z : {cplx(0.7, 0.2), cplx(4.0, -1.0), cplx(-3.0, 2.5), cplx(9.5, 0.0), cplx(0.0, 6.0)})
            EXPECT_LT(rel(bessel_j(n, z), oracle::bessel_j_series(n, z)), 1e-13) << n << " " << z;
}

TEST(Specfun, MatchesFrozenReferenceValues) {
    for (const auto& f : kFrozen) {
        EXPECT_LT(rel(bessel_j(f.n, f.z), f.j), 1e-13) << f.n << " " << f.z;
        EXPECT_LT(rel(hankel1(f.n, f.z), f.h), 1e-13) << f.n << " " << f.z;
    }
}

TEST(Specfun, SmallArgumentHankel) {
    const double t = 0.01;
    // leading term -i 2^n (n-1)!/(pi t^n) with the (1 + t^2/(4(n-1))) correction
    const cplx approx = -I * 4.0 / (PI * t * t) * (1.0 + t * t / 4.0);
    EXPECT_LT(rel(hankel1(2, t), approx), 1e-3);
    const cplx h1 = -I * 2.0 / (PI * t);
    EXPECT_LT(rel(hankel1(1, t), h1), 1e-3);
}

TEST(Specfun, LargeOrderExpansions) {
    for (int n : {25, 30, 40})
        for (double t : {0.5, 1.0, 2.0}) {
            double lead_j = 1.0;
            for (int k = 1; k <= n; ++k) lead_j *= (t / 2.0) / k;
            const double corr = 1.0 - t * t / (4.0 * n) + (8.0 * t * t + std::pow(t, 4)) / (32.0 * n * n);
            EXPECT_LT(rel(bessel_j(n, t), lead_j * corr), 2.0 / (n * n)) << n << " " << t;
            const cplx lead_h = -I / (PI * lead_j * n);  // -i (n-1)! (2/t)^n / pi
            EXPECT_LT(rel(hankel1(n, t), lead_h), t * t / n) << n << " " << t;
        }
}

TEST(Specfun, LargeArgumentHankelAsymptotics) {
    double prev = 1.0;
    for (double x : {50.0, 100.0, 200.0, 400.0}) {
        const cplx z(x, 0.0);
        const cplx a = std::sqrt(2.0 / (PI * z)) * std::exp(I * (z - PI / 4.0));
        const double err = std::abs(hankel1(0, z) - a);
        EXPECT_LT(err, prev);
        prev = err;
    }
    EXPECT_LT(prev, 1e-4);
}

TEST(Specfun, DerivativeFromRecurrence) {
    const CylPair p = cyl_pair(1, 1.0);
    EXPECT_LT(std::abs(p.jp - (bessel_j(0, 1.0) - bessel_j(1, 1.0))), 1e-15);
}

TEST(Specfun, NegativeOrderParity) {
    const cplx z(1.0, 1.0);
    const CylPair a = cyl_pair(-3, z), b = cyl_pair(3, z);
    EXPECT_EQ(a.j, -b.j);
    EXPECT_EQ(a.jp, -b.jp);
    EXPECT_EQ(a.h, -b.h);
    EXPECT_EQ(a.hp, -b.hp);
    EXPECT_EQ(bessel_j(-4, z), bessel_j(4, z));
    EXPECT_EQ(hankel1(-4, z), hankel1(4, z));
}

TEST(Specfun, WronskianSingleCases) {
    for (auto [n, z] : {std::pair{4, cplx(2.7, 0.0)}, std::pair{5, cplx(3.0, -0.2)}}) {
        const CylPair p = cyl_pair(n, z);
        EXPECT_LT(std::abs(p.j * p.hp - p.jp * p.h - 2.0 * I / (PI * z)), 1e-10);
    }
}

TEST(Specfun, WronskianGrid) {
    for (cplx z : sample_grid())
        for (int n = 0; n <= 60; ++n) {
            const CylPair p = cyl_pair(n, z);
            // relative to the size of the products, which exceeds 2/(pi|z|) for Im z < 0
            const double scale = std::max(2.0 / (PI * std::abs(z)), std::abs(p.j * p.hp) + std::abs(p.jp * p.h));
            const double r = std::abs(p.j * p.hp - p.jp * p.h - 2.0 * I / (PI * z)) / scale;
            ASSERT_LT(r, 1e-10) << "n=" << n << " z=" << z;
        }
}

TEST(Specfun, RecurrenceGrid) {
    for (cplx z : sample_grid()) {
        const auto j = bessel_j_seq(61, z);
        const auto h = hankel1_seq(61, z);
        for (int n = 1; n <= 60; ++n) {
            for (const auto* f : {&j, &h}) {
                const auto& v = *f;
                const double r = std::abs(v[n - 1] + v[n + 1] - 2.0 * n / z * v[n]);
                const double scale = std::max(std::abs(v[n - 1]), std::abs(v[n + 1]));
                ASSERT_LE(r, 1e-9 * scale) << "n=" << n << " z=" << z;
            }
        }
    }
}

TEST(Specfun, BesselOdeGrid) {
    for (cplx z : sample_grid()) {
        const auto j = bessel_j_seq(64, z);
        const auto h = hankel1_seq(64, z);
        for (int n = 2; n <= 60; ++n)
            for (const auto* f : {&j, &h}) {
                const auto& v = *f;
                const cplx fp = (v[n - 1] - v[n + 1]) / 2.0;
                const cplx fpp = (v[n - 2] - 2.0 * v[n] + v[n + 2]) / 4.0;
                const cplx res = z * z * fpp + z * fp + (z * z - double(n * n)) * v[n];
                const double scale = std::abs(z * z * fpp) + std::abs(z * fp) + std::abs((z * z - double(n * n)) * v[n]);
                ASSERT_LT(std::abs(res), 1e-8 * scale) << "n=" << n << " z=" << z;
            }
    }
}

TEST(Specfun, SeqAgreesWithSingleEvaluation) {
    const cplx z(3.3, 0.4);
    const auto j = bessel_j_seq(20, z);
    for (int n = 0; n <= 20; ++n) EXPECT_EQ(j[n], bessel_j(n, z));
}
