#include "elres/layer_potentials.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "elres/specfun.hpp"

namespace elres {
namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

struct ZVal {
    cplx z, zp;
};

ZVal radial_fn(Radial radial, int n, cplx x) {
    const CylPair c = cyl_pair(n, x);
    return radial == Radial::J ? ZVal{c.j, c.jp} : ZVal{c.h, c.hp};
}

void check_omega(double omega) {
    if (!(omega > 0.0)) throw std::domain_error("layer potentials: omega must be positive");
}

}  // namespace

RadialField basis_field(WaveKind kind, Radial radial, int n, cplx k, double r) {
    const cplx x = k * r;
    const ZVal f = radial_fn(radial, n, x);
    const double nn = n;
    const cplx zpp = -f.zp / x - (1.0 - nn * nn / (x * x)) * f.z;
    const cplx s = 2.0 * nn * f.z / x;
    const cplx sp = 2.0 * nn * (x * f.zp - f.z) / (k * r * r);
    if (kind == WaveKind::Q) return {s, sp, 2.0 * kI * f.zp, 2.0 * kI * k * zpp};
    return {2.0 * f.zp, 2.0 * k * zpp, kI * s, kI * sp};
}

RadialField slp_field(const LameParams& p, double omega, double rho, int n, Density d, double r,
                      Side side) {
    check_omega(omega);
    const Wavenumbers w = wavenumbers(p, omega);
    const bool outer = side == Side::Auto ? r >= rho : side == Side::Outer;
    const Radial src = outer ? Radial::J : Radial::H;
    const Radial fld = outer ? Radial::H : Radial::J;
    const ZVal zs = radial_fn(src, n, w.ks * rho);
    const ZVal zp = radial_fn(src, n, w.kp * rho);
    const RadialField q = basis_field(WaveKind::Q, fld, n, w.ks, r);
    const RadialField pp = basis_field(WaveKind::P, fld, n, w.kp, r);
    const cplx om2 = cplx(omega * omega);
    const double nn = n;
    if (d == Density::Nu) {
        const cplx c = -kI * kPi / (4.0 * om2 * rho);
        return c * (nn * w.ks * rho * zs.z) * q + c * (w.kp * w.kp * rho * rho * zp.zp) * pp;
    }
    const cplx c = -kPi / (4.0 * om2 * rho);
    return c * (w.ks * w.ks * rho * rho * zs.zp) * q + c * (nn * w.kp * rho * zp.z) * pp;
}

Vec2c traction(const LameParams& p, int n, double r, const RadialField& f) {
    const double nn = n;
    const cplx div = f.ap + (f.a + kI * nn * f.b) / r;
    return Vec2c(p.lambda * div + 2.0 * p.mu * f.ap, p.mu * (kI * nn * f.a / r + f.bp - f.b / r));
}

ModeMatrix slp_disp_matrix(const LameParams& p, double omega, double rho, int n, double r, Side side) {
    ModeMatrix m;
    m.col(0) = slp_field(p, omega, rho, n, Density::Nu, r, side).trace();
    m.col(1) = slp_field(p, omega, rho, n, Density::T, r, side).trace();
    return m;
}

ModeMatrix slp_trac_matrix(const LameParams& p, double omega, double rho, int n, double r, Side side) {
    ModeMatrix m;
    m.col(0) = traction(p, n, r, slp_field(p, omega, rho, n, Density::Nu, r, side));
    m.col(1) = traction(p, n, r, slp_field(p, omega, rho, n, Density::T, r, side));
    return m;
}

ModeMatrix mode_matrix_boundary(const LameParams& p, double omega, double R, int n) {
    return slp_disp_matrix(p, omega, R, n, R, Side::Outer);
}

ModeMatrix traction_matrix(const LameParams& p, double omega, double R, int n, Limit side) {
    // The interior limit differs from the exterior one by exactly the identity.
    ModeMatrix g = slp_trac_matrix(p, omega, R, n, R, Side::Outer);
    if (side == Limit::Interior) g -= ModeMatrix::Identity();
    return g;
}

std::array<cplx, 2> qp_traction_coeffs(const LameParams& p, cplx k, double R, int n, WaveKind kind) {
    const Vec2c t = traction(p, n, R, basis_field(kind, Radial::J, n, k, R));
    return {t(0), t(1)};
}

TwoRadiusBlocks two_radius_coupling(const LameParams& p, double omega, double r_i, double r_e, int n) {
    if (!(r_i > 0.0) || !(r_e > r_i)) throw std::domain_error("two_radius_coupling: need 0 < r_i < r_e");
    return {slp_disp_matrix(p, omega, r_e, n, r_i), slp_trac_matrix(p, omega, r_e, n, r_i),
            slp_disp_matrix(p, omega, r_i, n, r_e), slp_trac_matrix(p, omega, r_i, n, r_e)};
}

cplx scalar_slp_mode(cplx k, double R, int n, const Point& x) {
    if (k == cplx(0.0)) throw std::domain_error("scalar_slp_mode: k = 0 unsupported");
    const double r = x.norm();
    const double th = std::atan2(x.y(), x.x());
    const double inner = std::min(r, R), outer = std::max(r, R);
    return -kI * kPi * R / 2.0 * bessel_j(n, k * inner) * hankel1(n, k * outer) *
           std::exp(kI * (double(n) * th));
}

Vec2c to_cartesian(int n, double theta, cplx a, cplx b) {
    const cplx e = std::exp(kI * (double(n) * theta));
    const double c = std::cos(theta), s = std::sin(theta);
    return Vec2c(e * (a * c - b * s), e * (a * s + b * c));
}

Vec2c vector_slp_eval(const LameParams& p, double omega, double R, int n, Density d, const Point& x,
                      Side side) {
    const RadialField f = slp_field(p, omega, R, n, d, x.norm(), side);
    return to_cartesian(n, std::atan2(x.y(), x.x()), f.a, f.b);
}

}  // namespace elres
