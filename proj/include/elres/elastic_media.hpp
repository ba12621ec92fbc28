#pragma once
// Lame parameters, wavenumbers and the physical square-root branch.

#include <complex>

namespace elres {

using cplx = std::complex<double>;

struct LameParams {
    cplx lambda{1.0, 0.0};
    cplx mu{1.0, 0.0};

    LameParams scaled(cplx c) const { return {c * lambda, c * mu}; }
};

enum class Convexity { Regular, Negative, Lossy };

struct ConvexityInfo {
    Convexity cls = Convexity::Regular;
    bool real_part_negative = false;  // real parts violate mu > 0, 2 lambda + 2 mu > 0
};

struct Wavenumbers {
    cplx ks, kp;
    double omega = 0.0;
};

struct AnnulusGeometry {
    double r_i = 0.0;
    double r_e = 0.0;

    void validate() const;
    double critical_radius() const;
};

// omega / sqrt(m) with Im >= 0; ties resolved to Re > 0.
cplx branch_wavenumber(double omega, cplx modulus);
Wavenumbers wavenumbers(const LameParams& p, double omega);
ConvexityInfo convexity_check(const LameParams& p);
double critical_radius(const AnnulusGeometry& g);

const char* to_string(Convexity c);

}  // namespace elres
