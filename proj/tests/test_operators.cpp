#include <doctest.h>

#include <cmath>
#include <random>

#include "wco/errors.hpp"
#include "wco/expr.hpp"
#include "wco/operators.hpp"
#include "wco/spectra.hpp"

using namespace wco;

TEST_CASE("composition matrix of z/2 is the diagonal 2^{-j}") {
    const OperatorTruncation c = compose_matrix(parse_symbol("z/2"), 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const cplx expected = i == j ? cplx(std::pow(0.5, j)) : cplx(0.0);
            CHECK(std::abs(c.matrix(i, j) - expected) <= 1e-15);
        }
    CHECK(c.kind == TruncationKind::composition);
    CHECK(c.order == 6);
}

TEST_CASE("composition matrix columns are Taylor coefficients of the iterated power") {
    const AnalyticMap phi = parse_symbol("z/(2-z)");
    const OperatorTruncation c = compose_matrix(phi, 12);
    // column 0 is e_0 (phi^0 = 1)
    for (int i = 0; i < 12; ++i) CHECK(std::abs(c.matrix(i, 0) - cplx(i == 0 ? 1.0 : 0.0)) <= 1e-15);
    // independent convolution oracle for column 3
    const Series t = phi.taylor(12);
    Series p{cplx(1.0)};
    p.resize(12, cplx(0.0));
    for (int rep = 0; rep < 3; ++rep) {
        Series q(12, cplx(0.0));
        for (int i = 0; i < 12; ++i)
            for (int j = 0; i + j < 12; ++j) q[i + j] += p[i] * t[j];
        p = q;
    }
    for (int i = 0; i < 12; ++i) CHECK(std::abs(c.matrix(i, 3) - p[i]) <= 1e-13);
}

TEST_CASE("Toeplitz matrix of exp(z) holds reciprocal factorials") {
    const OperatorTruncation t = toeplitz_matrix(parse_symbol("exp(z)"), 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            double expected = 0.0;
            if (i >= j) {
                expected = 1.0;
                for (int k = 2; k <= i - j; ++k) expected /= k;
            }
            CHECK(std::abs(t.matrix(i, j) - cplx(expected)) <= 1e-14);
        }
}

TEST_CASE("Toeplitz compression norm stays below the sup norm") {
    const AnalyticMap psi = parse_symbol("exp(z)");
    const double bound = std::exp(1.0);
    for (int n : {8, 32, 128})
        CHECK(operator_norm_estimate(toeplitz_matrix(psi, n).matrix).value <= bound + 1e-9);
}

TEST_CASE("weighted matrix equals the Toeplitz-composition product") {
    const AnalyticMap psi = parse_symbol("2*exp(z)/(2-z)");
    const AnalyticMap phi = parse_symbol("z/(2-z)");
    const int n = 24;
    const Eigen::MatrixXcd w = wco_matrix(psi, phi, n).matrix;
    const Eigen::MatrixXcd product =
        toeplitz_matrix(psi, n).matrix * compose_matrix(phi, n).matrix;
    CHECK((w - product).norm() <= 1e-12 * product.norm());
}

TEST_CASE("weighted matrix is triangular when phi fixes the origin linearly") {
    const Eigen::MatrixXcd w = wco_matrix(parse_symbol("exp(z)"), parse_symbol("z/2"), 10).matrix;
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) CHECK(std::abs(w(i, j)) <= 1e-15);
}

TEST_CASE("kernel vectors") {
    const cplx a(0.2, 0.5);
    const Eigen::VectorXcd k = kernel_vector(a, 5);
    cplx p(1.0);
    for (int i = 0; i < 5; ++i) {
        CHECK(std::abs(k(i) - p) <= 1e-15);
        p *= std::conj(a);
    }
}

TEST_CASE("adjoint eigenvector residual vanishes at the fixed point") {
    // phi(0) = 0: k_0 = e_0 is an exact adjoint eigenvector
    CHECK(adjoint_kernel_residual(parse_symbol("exp(z)"), parse_symbol("z/2"), cplx(0.0), 32) <=
          1e-12);

    // generic interior fixed point: residual decays with the truncation order
    const cplx a(0.4, 0.1);
    const AnalyticMap tau = AnalyticMap::mobius(-1.0, a, -std::conj(a), 1.0);
    const AnalyticMap phi = compose(tau, compose(AnalyticMap::mobius(0.5, 0.0, 0.0, 1.0), tau));
    const double r64 = adjoint_kernel_residual(parse_symbol("exp(z)"), phi, a, 64);
    const double r128 = adjoint_kernel_residual(parse_symbol("exp(z)"), phi, a, 128);
    CHECK(r128 <= r64 + 1e-12);
    CHECK(r128 <= 1e-8);

    CHECK_THROWS_AS(adjoint_kernel_residual(parse_symbol("1"), parse_symbol("z/2"), cplx(1.5), 8),
                    AnchorNotInterior);
    CHECK_THROWS_AS(
        adjoint_kernel_residual(parse_symbol("1"), parse_symbol("z/2"), cplx(0.5), 8),
        NotFixedPoint);
}

TEST_CASE("refuted self-maps are rejected") {
    CHECK_THROWS_AS(compose_matrix(parse_symbol("2*z"), 8), PreconditionViolation);
    CHECK_THROWS_AS(wco_matrix(parse_symbol("1"), parse_symbol("exp(z)"), 8),
                    PreconditionViolation);
    CHECK_THROWS_AS(compose_matrix(parse_symbol("z/2"), 1), PreconditionViolation);
}

TEST_CASE("compression norms are monotone in the truncation order") {
    const AnalyticMap psi = parse_symbol("exp(z)");
    const AnalyticMap phi = parse_symbol("(z+1)/2");
    double prev = 0.0;
    for (int n : {8, 16, 32, 64, 128}) {
        const double nm = operator_norm_estimate(wco_matrix(psi, phi, n).matrix).value;
        CHECK(nm >= prev - 1e-9);
        prev = nm;
    }
}
