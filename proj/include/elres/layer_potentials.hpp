#pragma once
// Single-layer potentials on circles, written in the (e^{in theta} nu, e^{in theta} t)
// mode basis. Every field here has the form a(r) e^{in theta} nu + b(r) e^{in theta} t.

#include <array>

#include <Eigen/Dense>

#include "elres/elastic_media.hpp"

namespace elres {

using ModeMatrix = Eigen::Matrix2cd;  // columns act on (nu, t) coefficients
using Vec2c = Eigen::Vector2cd;
using Point = Eigen::Vector2d;

enum class Density { Nu, T };
enum class WaveKind { Q, P };     // shear / pressure
enum class Radial { J, H };       // entire / radiating
enum class Side { Auto, Outer, Inner };
enum class Limit { Exterior, Interior };

// Radial coefficients and their r-derivatives.
struct RadialField {
    cplx a{}, ap{}, b{}, bp{};

    RadialField& operator+=(const RadialField& o) {
        a += o.a; ap += o.ap; b += o.b; bp += o.bp;
        return *this;
    }
    friend RadialField operator+(RadialField x, const RadialField& y) { return x += y; }
    friend RadialField operator*(cplx s, const RadialField& f) {
        return {s * f.a, s * f.ap, s * f.b, s * f.bp};
    }
    Vec2c trace() const { return Vec2c(a, b); }
};

// Q_n / P_n built from J_n (entire) or H_n (radiating) at wavenumber k.
RadialField basis_field(WaveKind kind, Radial radial, int n, cplx k, double r);

// S^omega_{|y|=rho}[e^{in theta} density] at radius r. Side picks the
// one-sided form when r == rho; Auto uses r versus rho.
RadialField slp_field(const LameParams& p, double omega, double rho, int n, Density d, double r,
                      Side side = Side::Auto);

// Traction lambda (div u) nu + 2 mu (sym grad u) nu on the circle |x| = r.
Vec2c traction(const LameParams& p, int n, double r, const RadialField& f);

ModeMatrix slp_disp_matrix(const LameParams& p, double omega, double rho, int n, double r,
                           Side side = Side::Auto);
ModeMatrix slp_trac_matrix(const LameParams& p, double omega, double rho, int n, double r,
                           Side side = Side::Auto);

ModeMatrix mode_matrix_boundary(const LameParams& p, double omega, double R, int n);
ModeMatrix traction_matrix(const LameParams& p, double omega, double R, int n, Limit side);

// Traction coefficients of the entire Q_n (k = ks) or P_n (k = kp) field at radius R.
std::array<cplx, 2> qp_traction_coeffs(const LameParams& p, cplx k, double R, int n, WaveKind kind);

// Cross-circle blocks: r13 / r23 are displacement / traction at r_i of the potential
// on r_e; r32 / r42 are displacement / traction at r_e of the potential on r_i.
struct TwoRadiusBlocks {
    ModeMatrix r13, r23, r32, r42;
};
TwoRadiusBlocks two_radius_coupling(const LameParams& p, double omega, double r_i, double r_e, int n);

// Helmholtz S^k_{|y|=R}[e^{in theta}](x).
cplx scalar_slp_mode(cplx k, double R, int n, const Point& x);

// Cartesian displacement of e^{in theta} (a nu + b t) at angle theta.
Vec2c to_cartesian(int n, double theta, cplx a, cplx b);

Vec2c vector_slp_eval(const LameParams& p, double omega, double R, int n, Density d, const Point& x,
                      Side side = Side::Auto);

}  // namespace elres
