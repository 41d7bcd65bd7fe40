#pragma once

#include <Eigen/Dense>

#include "wco/analytic_map.hpp"

namespace wco {

enum class TruncationKind { composition, toeplitz, weighted_composition, general };

// Leading N x N block of an operator on H^2 in the monomial basis.
struct OperatorTruncation {
    Eigen::MatrixXcd matrix;
    int order = 0;
    TruncationKind kind = TruncationKind::general;
};

// Column j holds the Taylor coefficients of phi^j (the j-fold product).
OperatorTruncation compose_matrix(const AnalyticMap& phi, int n);

// Lower-triangular Toeplitz block of multiplication by psi.
OperatorTruncation toeplitz_matrix(const AnalyticMap& psi, int n);

// T_psi * C_phi; assembled by matrix product and cross-checked column-wise
// against the Taylor coefficients of psi * phi^j.
OperatorTruncation wco_matrix(const AnalyticMap& psi, const AnalyticMap& phi, int n);

// Coefficients (1, conj(a), conj(a)^2, ...) of the reproducing kernel K_a.
Eigen::VectorXcd kernel_vector(cplx a, int n);

// || W^* k_a - conj(psi(a)) k_a ||; tends to 0 with n when phi(a) = a.
double adjoint_kernel_residual(const AnalyticMap& psi, const AnalyticMap& phi, cplx a, int n);

}  // namespace wco
