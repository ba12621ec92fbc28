#pragma once
// Integer-order Bessel J_n and Hankel H_n^(1) for complex arguments.

#include <complex>
#include <vector>

namespace elres {

using cplx = std::complex<double>;

struct CylPair {
    cplx j, jp, h, hp;
    int order = 0;
    cplx arg;
};

// Orders above this are outside the validated range.
inline constexpr int kMaxOrder = 200;

cplx bessel_j(int n, cplx z);
cplx hankel1(int n, cplx z);
CylPair cyl_pair(int n, cplx z);

// J_0..J_nmax (and H_0..H_nmax) in one pass; nmax >= 0.
std::vector<cplx> bessel_j_seq(int nmax, cplx z);
std::vector<cplx> hankel1_seq(int nmax, cplx z);

}  // namespace elres
