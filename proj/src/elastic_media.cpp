#include "elres/elastic_media.hpp"

#include <cmath>
#include <stdexcept>

namespace elres {

cplx branch_wavenumber(double omega, cplx modulus) {
    if (modulus == cplx(0.0)) throw std::domain_error("degenerate material: zero modulus");
    cplx k = omega / std::sqrt(modulus);
    if (k.imag() < 0.0 || (k.imag() == 0.0 && k.real() < 0.0)) k = -k;
    return k;
}

Wavenumbers wavenumbers(const LameParams& p, double omega) {
    if (!(omega > 0.0)) throw std::domain_error("wavenumbers: omega must be positive");
    if (p.mu == cplx(0.0)) throw std::domain_error("degenerate material: mu = 0");
    const cplx m = p.lambda + 2.0 * p.mu;
    if (m == cplx(0.0)) throw std::domain_error("degenerate material: lambda + 2 mu = 0");
    return {branch_wavenumber(omega, p.mu), branch_wavenumber(omega, m), omega};
}

ConvexityInfo convexity_check(const LameParams& p) {
    ConvexityInfo info;
    const double lr = p.lambda.real(), mr = p.mu.real();
    info.real_part_negative = !(mr > 0.0 && 2.0 * lr + 2.0 * mr > 0.0);
    if (p.lambda.imag() != 0.0 || p.mu.imag() != 0.0)
        info.cls = Convexity::Lossy;
    else
        info.cls = info.real_part_negative ? Convexity::Negative : Convexity::Regular;
    return info;
}

void AnnulusGeometry::validate() const {
    if (!(r_i > 0.0) || !(r_e > r_i)) throw std::domain_error("annulus requires 0 < r_i < r_e");
}

double AnnulusGeometry::critical_radius() const {
    validate();
    return std::sqrt(r_e * r_e * r_e / r_i);
}

double critical_radius(const AnnulusGeometry& g) { return g.critical_radius(); }

const char* to_string(Convexity c) {
    switch (c) {
        case Convexity::Regular: return "REGULAR";
        case Convexity::Negative: return "NEGATIVE";
        case Convexity::Lossy: return "LOSSY";
    }
    return "?";
}

}  // namespace elres
