#pragma once
// Small numeric helpers shared by the solvers.

#include <algorithm>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/tools/minima.hpp>

namespace elres {

template <class M, class V>
double relative_residual(const M& A, const V& x, const V& b) {
    const double nb = b.norm();
    const double r = (A * x - b).norm();
    return nb > 0.0 ? r / nb : r;
}

template <class M>
double condition_number(const M& A) {
    Eigen::JacobiSVD<Eigen::Matrix<typename M::Scalar, M::RowsAtCompileTime, M::ColsAtCompileTime>> svd(A);
    const auto& s = svd.singularValues();
    const double smin = s(s.size() - 1);
    return smin > 0.0 ? s(0) / smin : INFINITY;
}

inline double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const std::size_t h = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + h, v.end());
    const double hi = v[h];
    if (v.size() % 2) return hi;
    return 0.5 * (hi + *std::max_element(v.begin(), v.begin() + h));
}

// Bracketed 1D minimization (golden section with parabolic steps).
template <class F>
double golden_section_min(F f, double a, double b, int max_iter) {
    std::uintmax_t it = max_iter;
    return boost::math::tools::brent_find_minima(f, a, b, 50, it).first;
}

}  // namespace elres
