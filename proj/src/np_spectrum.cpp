#include "elres/np_spectrum.hpp"

#include <cstdlib>
#include <stdexcept>

namespace elres {

NpModeMatrix np_matrix(const LameParams& p, double omega, double R, int n) {
    NpModeMatrix m;
    m.T = traction_matrix(p, omega, R, n, Limit::Exterior) - 0.5 * ModeMatrix::Identity();
    m.n = n;
    m.params = p;
    m.omega = omega;
    m.R = R;
    return m;
}

NpEigenSystem np_eigensystem(const ModeMatrix& T, double tol, int n) {
    if (tol <= 0.0) tol = 1e-10 * T.norm();
    const cplx a1 = T(0, 0), b1 = T(0, 1), a2 = T(1, 0), b2 = T(1, 1);
    NpEigenSystem e;
    e.n = n;
    if (std::abs(a2) > tol) {
        const cplx root = std::sqrt((a1 - b2) * (a1 - b2) + 4.0 * a2 * b1);
        e.case_tag = NpCase::Generic;
        e.xi = {0.5 * (a1 + b2 - root), 0.5 * (a1 + b2 + root)};
        for (int k = 0; k < 2; ++k) e.vec[k] = Vec2c(e.xi[k] - b2, a2);
        return e;
    }
    e.xi = {a1, b2};
    e.vec[0] = Vec2c(1.0, 0.0);
    if (std::abs(a1 - b2) > tol) {
        e.case_tag = NpCase::DiagonalDistinct;
        e.vec[1] = Vec2c(b1, b2 - a1);
    } else if (std::abs(b1) <= tol) {
        e.case_tag = NpCase::DiagonalEqual;
        e.vec[1] = Vec2c(0.0, 1.0);
    } else {
        e.case_tag = NpCase::Jordan;
        e.xi[1] = a1;
        e.vec[1] = Vec2c(0.0, 1.0 / b1);
    }
    return e;
}

std::pair<double, double> quasistatic_reference(const LameParams& p, int n) {
    const ConvexityInfo info = convexity_check(p);
    if (info.cls != Convexity::Regular) throw std::domain_error("quasistatic_reference: parameters not regular");
    const double lam = p.lambda.real(), mu = p.mu.real();
    const double k0 = mu / (2.0 * (lam + 2.0 * mu));
    const int m = std::abs(n);
    if (m == 0) return {-lam / (2.0 * (lam + 2.0 * mu)), 0.5};
    if (m == 1) return {k0, 0.5};
    return {-k0, k0};
}

const char* to_string(NpCase c) {
    switch (c) {
        case NpCase::Generic: return "generic";
        case NpCase::DiagonalDistinct: return "diagonal_distinct";
        case NpCase::DiagonalEqual: return "diagonal_equal";
        case NpCase::Jordan: return "jordan";
    }
    return "?";
}

}  // namespace elres
