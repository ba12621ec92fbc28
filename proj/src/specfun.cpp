#include "elres/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace elres {
namespace {

using real = long double;
using lcplx = std::complex<real>;

constexpr real kPi = 3.141592653589793238462643383279502884L;
constexpr real kEuler = 0.577215664901532860606512090082402431L;
const lcplx kI(0.0L, 1.0L);

void check_args(int n, cplx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("bessel: non-finite argument");
    if (std::abs(n) > kMaxOrder)
        throw std::domain_error("bessel: order " + std::to_string(n) + " outside validated range");
}

// Ascending series, used for |z| <= 1 where every term is small.
std::vector<lcplx> j_series(int nmax, lcplx z) {
    std::vector<lcplx> out(nmax + 1);
    const lcplx h = z / 2.0L;
    const lcplx q = -h * h;
    lcplx lead = 1.0L;
    for (int n = 0; n <= nmax; ++n) {
        if (n > 0) lead *= h / static_cast<real>(n);
        lcplx term = lead, sum = lead;
        for (int k = 1; k < 60; ++k) {
            term *= q / static_cast<real>(k * (n + k));
            sum += term;
            if (std::abs(term) <= 1e-22L * std::abs(sum)) break;
        }
        out[n] = sum;
    }
    return out;
}

// Miller backward recurrence, normalized by the generating function at
// theta = -+pi/2 (whichever side gives the growing exponential).
std::vector<lcplx> j_miller(int nmax, lcplx z) {
    const real az = std::abs(z);
    const real top = std::max<real>(nmax, az);
    int m = static_cast<int>(top + 30.0L + 4.0L * std::sqrt(top + 10.0L));
    m += m % 2;
    std::vector<lcplx> f(m + 2);
    f[m + 1] = 0.0L;
    f[m] = 1e-30L;
    const lcplx zi = 1.0L / z;
    for (int k = m; k >= 1; --k) {
        f[k - 1] = static_cast<real>(2 * k) * zi * f[k] - f[k + 1];
        if (std::abs(f[k - 1]) > 1e300L) {
            for (int i = k - 1; i <= m + 1; ++i) f[i] *= 1e-300L;
        }
    }
    const bool upper = z.imag() >= 0.0L;
    const lcplx unit = upper ? -kI : kI;
    lcplx s = f[0], pw = 1.0L;
    for (int k = 1; k <= m; ++k) {
        pw *= unit;
        s += 2.0L * pw * f[k];
    }
    const lcplx target = upper ? std::exp(-kI * z) : std::exp(kI * z);
    const lcplx scale = target / s;
    std::vector<lcplx> out(nmax + 1);
    for (int k = 0; k <= nmax; ++k) out[k] = f[k] * scale;
    return out;
}

std::vector<lcplx> j_seq_l(int nmax, lcplx z) {
    if (z == lcplx(0.0L)) {
        std::vector<lcplx> out(nmax + 1, 0.0L);
        out[0] = 1.0L;
        return out;
    }
    if (std::abs(z) <= 1.0L) return j_series(nmax, z);
    return j_miller(nmax, z);
}

// Y0, Y1 from their logarithmic series; |z| < 2.
void y01_series(lcplx z, lcplx j0, lcplx j1, lcplx& y0, lcplx& y1) {
    const lcplx h = z / 2.0L;
    const lcplx q = -h * h;
    const lcplx lg = std::log(h);
    // Y0
    lcplx term = 1.0L, s0 = 0.0L;
    real harm = 0.0L;
    for (int k = 1; k < 60; ++k) {
        term *= q / static_cast<real>(k * k);
        harm += 1.0L / k;
        const lcplx add = -harm * term;
        s0 += add;
        if (std::abs(add) <= 1e-22L * std::abs(s0)) break;
    }
    y0 = (2.0L / kPi) * ((lg + kEuler) * j0 + s0);
    // Y1; psi(k+1) + psi(k+2) = -2 gamma + 2 H_k + 1/(k+1)
    term = h;
    harm = 0.0L;
    lcplx s1 = 0.0L;
    for (int k = 0; k < 60; ++k) {
        if (k > 0) {
            term *= q / static_cast<real>(k * (k + 1));
            harm += 1.0L / k;
        }
        const real psi = -2.0L * kEuler + 2.0L * harm + 1.0L / (k + 1);
        const lcplx add = psi * term;
        s1 += add;
        if (k > 2 && std::abs(add) <= 1e-22L * std::abs(s1)) break;
    }
    y1 = -2.0L / (kPi * z) + (2.0L / kPi) * lg * j1 - s1 / kPi;
}

// H0'/H0 by Steed's continued fraction (modified Lentz); |z| >= 2, Im z >= 0.
lcplx h0_log_derivative(lcplx z) {
    const real tiny = 1e-300L;
    lcplx f = tiny, c = f, d = 0.0L;
    for (int k = 1; k < 20000; ++k) {
        const real a = (k - 0.5L) * (k - 0.5L);
        const lcplx b = 2.0L * (z + static_cast<real>(k) * kI);
        d = b + a * d;
        if (d == lcplx(0.0L)) d = tiny;
        c = b + a / c;
        if (c == lcplx(0.0L)) c = tiny;
        d = 1.0L / d;
        const lcplx delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0L) < 1e-19L) break;
    }
    return -1.0L / (2.0L * z) + kI + kI / z * f;
}

// H_0..H_nmax for Re z >= 0, Im z >= 0, z != 0.
std::vector<lcplx> h_first_quadrant(int nmax, lcplx z) {
    const int top = std::max(nmax, 1);
    const auto j = j_seq_l(top, z);
    lcplx h0, h1;
    if (std::abs(z) < 2.0L) {
        lcplx y0, y1;
        y01_series(z, j[0], j[1], y0, y1);
        h0 = j[0] + kI * y0;
        h1 = j[1] + kI * y1;
    } else {
        const lcplx rho = h0_log_derivative(z);
        h0 = 2.0L * kI / (kPi * z * (j[0] * rho + j[1]));
        h1 = -rho * h0;
    }
    std::vector<lcplx> h(top + 1);
    h[0] = h0;
    h[1] = h1;
    const lcplx zi = 1.0L / z;
    for (int k = 1; k < top; ++k) h[k + 1] = static_cast<real>(2 * k) * zi * h[k] - h[k - 1];
    h.resize(nmax + 1);
    return h;
}

std::vector<lcplx> h_seq_l(int nmax, lcplx z) {
    if (z == lcplx(0.0L)) throw std::domain_error("hankel1: singular at z = 0");
    const real x = z.real(), y = z.imag();
    if (x >= 0.0L && y >= 0.0L) return h_first_quadrant(nmax, z);
    std::vector<lcplx> out(nmax + 1);
    if (x >= 0.0L) {
        // fourth quadrant: H(z) = 2J(z) - conj(H(conj z))
        const auto hc = h_first_quadrant(nmax, std::conj(z));
        const auto j = j_seq_l(nmax, z);
        for (int k = 0; k <= nmax; ++k) out[k] = 2.0L * j[k] - std::conj(hc[k]);
    } else if (y >= 0.0L) {
        // second quadrant and the negative real axis
        const auto hc = h_first_quadrant(nmax, -std::conj(z));
        for (int k = 0; k <= nmax; ++k) out[k] = (k % 2 ? 1.0L : -1.0L) * std::conj(hc[k]);
    } else {
        // third quadrant: H(z) = (-1)^n (H(-z) + 2J(-z))
        const lcplx w = -z;
        const auto hw = h_first_quadrant(nmax, w);
        const auto jw = j_seq_l(nmax, w);
        for (int k = 0; k <= nmax; ++k) out[k] = (k % 2 ? -1.0L : 1.0L) * (hw[k] + 2.0L * jw[k]);
    }
    return out;
}

std::vector<cplx> narrow(const std::vector<lcplx>& v) {
    std::vector<cplx> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = cplx(static_cast<double>(v[i].real()), static_cast<double>(v[i].imag()));
    return out;
}

cplx narrow(lcplx v) { return {static_cast<double>(v.real()), static_cast<double>(v.imag())}; }

real parity(int n) { return (n < 0 && (n % 2)) ? -1.0L : 1.0L; }

}  // namespace

std::vector<cplx> bessel_j_seq(int nmax, cplx z) {
    check_args(nmax, z);
    if (nmax < 0) throw std::domain_error("bessel_j_seq: negative nmax");
    return narrow(j_seq_l(nmax, lcplx(z)));
}

std::vector<cplx> hankel1_seq(int nmax, cplx z) {
    check_args(nmax, z);
    if (nmax < 0) throw std::domain_error("hankel1_seq: negative nmax");
    return narrow(h_seq_l(nmax, lcplx(z)));
}

cplx bessel_j(int n, cplx z) {
    check_args(n, z);
    const int m = std::abs(n);
    return narrow(parity(n) * j_seq_l(m, lcplx(z))[m]);
}

cplx hankel1(int n, cplx z) {
    check_args(n, z);
    const int m = std::abs(n);
    return narrow(parity(n) * h_seq_l(m, lcplx(z))[m]);
}

CylPair cyl_pair(int n, cplx z) {
    check_args(n, z);
    const int m = std::abs(n);
    const lcplx zl(z);
    const int top = std::max(m, 1);
    const auto j = j_seq_l(top, zl);
    const auto h = h_seq_l(top, zl);
    lcplx jp, hp;
    if (m == 0) {
        jp = -j[1];
        hp = -h[1];
    } else {
        const lcplx q = static_cast<real>(m) / zl;
        jp = j[m - 1] - q * j[m];
        hp = h[m - 1] - q * h[m];
    }
    const real s = parity(n);
    CylPair p;
    p.j = narrow(s * j[m]);
    p.jp = narrow(s * jp);
    p.h = narrow(s * h[m]);
    p.hp = narrow(s * hp);
    p.order = n;
    p.arg = z;
    return p;
}

}  // namespace elres
