#pragma once
// Mode-n Neumann-Poincare matrix on a circle and its closed-form eigensystem.

#include <array>
#include <utility>

#include "elres/layer_potentials.hpp"

namespace elres {

struct NpModeMatrix {
    ModeMatrix T = ModeMatrix::Zero();  // (a1, b1; a2, b2)
    int n = 0;
    LameParams params;
    double omega = 0.0;
    double R = 0.0;
};

enum class NpCase { Generic, DiagonalDistinct, DiagonalEqual, Jordan };

struct NpEigenSystem {
    NpCase case_tag = NpCase::Generic;
    std::array<cplx, 2> xi{};
    std::array<Vec2c, 2> vec{};  // vec[1] is a generalized eigenvector in the Jordan case
    int n = 0;
};

NpModeMatrix np_matrix(const LameParams& p, double omega, double R, int n);

// tol <= 0 selects the default 1e-10 * ||T||.
NpEigenSystem np_eigensystem(const ModeMatrix& T, double tol = 0.0, int n = 0);
inline NpEigenSystem np_eigensystem(const NpModeMatrix& m, double tol = 0.0) {
    return np_eigensystem(m.T, tol, m.n);
}

// omega -> 0 limits of the eigenvalue pair; p must be regular.
std::pair<double, double> quasistatic_reference(const LameParams& p, int n);

const char* to_string(NpCase c);

}  // namespace elres
