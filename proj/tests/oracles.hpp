#pragma once
// Independent reference computations used only by the tests.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <type_traits>

#include "elres/elres.hpp"

namespace oracle {

using elres::cplx;
using elres::Point;
using elres::Vec2c;
using Mat2c = Eigen::Matrix2cd;

inline const cplx I(0.0, 1.0);
inline constexpr double PI = std::numbers::pi;

// 60-term ascending series for J_n in long double.
inline cplx bessel_j_series(int n, cplx z) {
    using L = std::complex<long double>;
    const L h = L(z) / 2.0L;
    L lead = 1.0L;
    for (int k = 1; k <= n; ++k) lead *= h / static_cast<long double>(k);
    L term = lead, sum = lead;
    for (int k = 1; k < 60; ++k) {
        term *= -h * h / static_cast<long double>(k * (n + k));
        sum += term;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

inline double sqnorm(const Vec2c& v) { return v.squaredNorm(); }
inline double sqnorm(const cplx& v) { return std::norm(v); }
inline double sqnorm(double v) { return v * v; }

// Periodic trapezoid rule on the circle |y| = R; panels double until two
// successive values agree to tol.
template <class F>
auto trapezoid_circle(F f, double R, double tol = 1e-10, int start = 256, int max_panels = 1 << 15) {
    using T = std::decay_t<decltype(f(0.0))>;
    auto rule = [&](int m) -> T {
        T s = f(0.0) * 0.0;
        for (int j = 0; j < m; ++j) s += f(2.0 * PI * j / m);
        return s * (2.0 * PI * R / m);
    };
    T prev = rule(start);
    for (int m = 2 * start; m <= max_panels; m *= 2) {
        const T cur = rule(m);
        const double scale = std::max(1.0, std::sqrt(sqnorm(cur)));
        if (std::sqrt(sqnorm(T(cur - prev))) < tol * scale) return cur;
        prev = cur;
    }
    return prev;
}


template <class F>
auto trapezoid_fixed(F f, double R, int m) {
    using T = std::decay_t<decltype(f(0.0))>;
    T s = f(0.0) * 0.0;
    for (int j = 0; j < m; ++j) s += f(2.0 * PI * j / m);
    return T(s * (2.0 * PI * R / m));
}

// -(i/4) int H0(k|x-y|) e^{in theta_y} ds_y
inline cplx scalar_slp_quadrature(cplx k, double R, int n, const Point& x) {
    auto f = [&](double th) {
        const Point y(R * std::cos(th), R * std::sin(th));
        return -I / 4.0 * elres::hankel1(0, k * (x - y).norm()) * std::exp(I * (double(n) * th));
    };
    return trapezoid_circle(f, R);
}

// Fundamental solution of L + omega^2:
// -i/(4 mu) H0(ks r) delta + i/(4 omega^2) d_i d_j (H0(kp r) - H0(ks r))
inline Mat2c kernel(const elres::LameParams& p, double omega, const Point& d) {
    const elres::Wavenumbers w = elres::wavenumbers(p, omega);
    const double r = d.norm();
    const Point e = d / r;
    auto hess = [&](cplx k) {
        const cplx x = k * r;
        const cplx h0 = elres::hankel1(0, x), h1 = elres::hankel1(1, x);
        const cplx h0pp = -(h0 - h1 / x);
        const cplx h0p = -h1;
        Mat2c m;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                m(i, j) = k * k * (h0pp * e(i) * e(j) + h0p / x * ((i == j ? 1.0 : 0.0) - e(i) * e(j)));
        return m;
    };
    Mat2c g = (-I / (4.0 * p.mu) * elres::hankel1(0, w.ks * r)) * Mat2c::Identity();
    g += I / (4.0 * omega * omega) * (hess(w.kp) - hess(w.ks));
    return g;
}

inline Vec2c vector_slp_quadrature(const elres::LameParams& p, double omega, double R, int n, elres::Density d,
                                   const Point& x, double tol = 1e-11) {
    auto f = [&](double th) -> Vec2c {
        const Point y(R * std::cos(th), R * std::sin(th));
        const Vec2c dens = d == elres::Density::Nu ? Vec2c(std::cos(th), std::sin(th))
                                                   : Vec2c(-std::sin(th), std::cos(th));
        return kernel(p, omega, x - y) * (std::exp(I * (double(n) * th)) * dens);
    };
    return trapezoid_circle(f, R, tol, 512, 1 << 14);
}

using Field = std::function<Vec2c(const Point&)>;

// Central-difference Jacobian J(i, j) = d u_i / d x_j.
inline Mat2c jacobian(const Field& u, const Point& x, double h) {
    Mat2c J;
    for (int j = 0; j < 2; ++j) {
        Point e = Point::Zero();
        e(j) = h;
        const Vec2c d = (u(x + e) - u(x - e)) / (2.0 * h);
        J.col(j) = d;
    }
    return J;
}

// Traction lambda div u nu + mu (grad u + grad u^T) nu on |x| = r, returned as
// (nu, t) coefficients of e^{in theta}.
inline Vec2c fd_traction(const elres::LameParams& p, const Field& u, const Point& x, int n, double h) {
    const Mat2c J = jacobian(u, x, h);
    const double th = std::atan2(x.y(), x.x());
    const Vec2c nu(std::cos(th), std::sin(th)), t(-std::sin(th), std::cos(th));
    const Vec2c s = p.lambda * J.trace() * nu + p.mu * (J + J.transpose()) * nu;
    const cplx e = std::exp(-I * (double(n) * th));
    return Vec2c(e * nu.dot(s), e * t.dot(s));
}

// mu Lap u + (lambda + mu) grad div u + omega^2 u by second-order differences.
inline Vec2c pde_residual(const elres::LameParams& p, double omega, const Field& u, const Point& x, double h) {
    auto at = [&](double dx, double dy) { return u(x + Point(dx * h, dy * h)); };
    const Vec2c c = at(0, 0);
    const Vec2c uxx = (at(1, 0) - 2.0 * c + at(-1, 0)) / (h * h);
    const Vec2c uyy = (at(0, 1) - 2.0 * c + at(0, -1)) / (h * h);
    const Vec2c uxy = (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4.0 * h * h);
    const Vec2c lap = uxx + uyy;
    const Vec2c graddiv(uxx(0) + uxy(1), uxy(0) + uyy(1));
    return p.mu * lap + (p.lambda + p.mu) * graddiv + omega * omega * c;
}

// Sum of the magnitudes of the three terms; residuals are measured against it.
inline double pde_scale(const elres::LameParams& p, double omega, const Field& u, const Point& x, double h) {
    auto at = [&](double dx, double dy) { return u(x + Point(dx * h, dy * h)); };
    const Vec2c c = at(0, 0);
    const Vec2c uxx = (at(1, 0) - 2.0 * c + at(-1, 0)) / (h * h);
    const Vec2c uyy = (at(0, 1) - 2.0 * c + at(0, -1)) / (h * h);
    const Vec2c uxy = (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4.0 * h * h);
    const Vec2c graddiv(uxx(0) + uxy(1), uxy(0) + uyy(1));
    return std::abs(p.mu) * (uxx + uyy).norm() + std::abs(p.lambda + p.mu) * graddiv.norm() + omega * omega * c.norm();
}

// True solutions give a residual that is pure O(h^2) truncation: halving h
// divides it by ~4. Returns the residual at h relative to pde_scale and the
// ratio residual(h/2) / residual(h).
struct PdeCheck {
    double rel = 0.0;
    double ratio = 0.0;
};
inline PdeCheck pde_check(const elres::LameParams& p, double omega, const Field& u, const Point& x, double h) {
    const double r1 = pde_residual(p, omega, u, x, h).norm();
    const double r2 = pde_residual(p, omega, u, x, h / 2).norm();
    return {r1 / pde_scale(p, omega, u, x, h), r2 / r1};
}

inline cplx fd_divergence(const Field& u, const Point& x, double h) { return jacobian(u, x, h).trace(); }
inline cplx fd_curl(const Field& u, const Point& x, double h) {
    const Mat2c J = jacobian(u, x, h);
    return J(1, 0) - J(0, 1);
}

}  // namespace oracle
