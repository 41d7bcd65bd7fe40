#include "wco/operators.hpp"

#include <cmath>

#include "wco/errors.hpp"
#include "wco/symbols.hpp"

namespace wco {

OperatorTruncation compose_matrix(const AnalyticMap& phi, int n) {
    if (n < 2) throw PreconditionViolation("compose_matrix: order must be at least 2");
    if (self_map_check(phi) == SelfMapStatus::refuted)
        throw PreconditionViolation("compose_matrix: phi is not a self-map of the disk");
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    a(0, 0) = cplx(1.0);
    const Series phis = phi.taylor(n);
    Series col(static_cast<std::size_t>(n), cplx(0.0));
    col[0] = cplx(1.0);
    for (int j = 1; j < n; ++j) {
        col = series_mul(col, phis);
        for (int i = 0; i < n; ++i) a(i, j) = col[i];
    }
    return OperatorTruncation{std::move(a), n, TruncationKind::composition};
}

OperatorTruncation toeplitz_matrix(const AnalyticMap& psi, int n) {
    if (n < 2) throw PreconditionViolation("toeplitz_matrix: order must be at least 2");
    const Series c = psi.taylor(n);
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = j; i < n; ++i) a(i, j) = c[i - j];
    return OperatorTruncation{std::move(a), n, TruncationKind::toeplitz};
}

OperatorTruncation wco_matrix(const AnalyticMap& psi, const AnalyticMap& phi, int n) {
    if (n < 2) throw PreconditionViolation("wco_matrix: order must be at least 2");
    const OperatorTruncation t = toeplitz_matrix(psi, n);
    const OperatorTruncation c = compose_matrix(phi, n);
    Eigen::MatrixXcd a = t.matrix * c.matrix;

    // second assembly path: column j = taylor(psi * phi^j)
    const Series phis = phi.taylor(n);
    Series col = psi.taylor(n);
    double scale = 0.0;
    for (const auto& v : col) scale = std::max(scale, std::abs(v));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (std::abs(a(i, j) - col[i]) > 1e-12 * std::max(1.0, scale))
                throw Error("wco_matrix: assembly paths disagree beyond 1e-12");
        }
        if (j + 1 < n) col = series_mul(col, phis);
    }
    return OperatorTruncation{std::move(a), n, TruncationKind::weighted_composition};
}

Eigen::VectorXcd kernel_vector(cplx a, int n) {
    if (std::abs(a) >= 1.0) throw AnchorNotInterior("kernel_vector: |a| < 1 required");
    Eigen::VectorXcd v(n);
    cplx p(1.0);
    for (int k = 0; k < n; ++k) {
        v(k) = p;
        p *= std::conj(a);
    }
    return v;
}

double adjoint_kernel_residual(const AnalyticMap& psi, const AnalyticMap& phi, cplx a, int n) {
    if (std::abs(a) >= 1.0)
        throw AnchorNotInterior("adjoint_kernel_residual: boundary anchors are not in H^2");
    if (std::abs(phi.eval(a) - a) > 1e-10)
        throw NotFixedPoint("adjoint_kernel_residual: phi(a) != a");
    const OperatorTruncation w = wco_matrix(psi, phi, n);
    const Eigen::VectorXcd k = kernel_vector(a, n);
    const Eigen::VectorXcd lhs = w.matrix.adjoint() * k;
    return (lhs - std::conj(psi.eval(a)) * k).norm();
}

}  // namespace wco
