#include <doctest.h>

#include <Eigen/SVD>
#include <cmath>
#include <random>

#include "wco/errors.hpp"
#include "wco/expr.hpp"
#include "wco/spectra.hpp"

using namespace wco;

namespace {

Eigen::MatrixXcd random_matrix(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = cplx(gauss(rng), gauss(rng));
    return a;
}

}  // namespace

TEST_CASE("norm estimates on closed-form matrices") {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
    d(0, 0) = 1.0;
    d(1, 1) = 0.5;
    d(2, 2) = 0.25;
    CHECK(operator_norm_estimate(d).value == doctest::Approx(1.0).epsilon(1e-10));

    Eigen::MatrixXcd jordan = Eigen::MatrixXcd::Zero(2, 2);
    jordan(0, 1) = 2.0;
    CHECK(operator_norm_estimate(jordan).value == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("power iteration matches the SVD oracle") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + int(rng() % 23);
        const Eigen::MatrixXcd a = random_matrix(rng, n);
        const double oracle = Eigen::JacobiSVD<Eigen::MatrixXcd>(a).singularValues()(0);
        const NormEstimate est = operator_norm_estimate(a);
        CHECK(est.value == doctest::Approx(oracle).epsilon(1e-8));
        CHECK(est.converged);
    }
}

TEST_CASE("spectral radius and the Gelfand trace") {
    Eigen::MatrixXcd nilpotent = Eigen::MatrixXcd::Zero(2, 2);
    nilpotent(0, 1) = 1.0;
    CHECK(spectral_radius_matrix(nilpotent) <= 1e-12);
    const auto trace = gelfand_sequence(nilpotent, 4);
    REQUIRE(trace.size() == 4);
    CHECK(trace[0].second == doctest::Approx(1.0).epsilon(1e-10));
    for (std::size_t k = 1; k < trace.size(); ++k) CHECK(trace[k].second <= 1e-10);

    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(2, 2);
    diag(0, 0) = 3.0;
    diag(1, 1) = -1.0;
    CHECK(spectral_radius_matrix(diag) == doctest::Approx(3.0).epsilon(1e-12));

    CHECK_THROWS_AS(gelfand_sequence(diag, 65), PreconditionViolation);
}

TEST_CASE("spectral radius lower-bounds every Gelfand term") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::MatrixXcd a = random_matrix(rng, 6 + int(rng() % 10));
        const double rho = spectral_radius_matrix(a);
        for (const auto& [k, v] : gelfand_sequence(a, 12)) CHECK(rho <= v + 1e-8);
    }
}

TEST_CASE("triangular weighted truncation has spectral radius |psi(0)|") {
    const Eigen::MatrixXcd w =
        wco_matrix(parse_symbol("exp(z)"), parse_symbol("z/2"), 64).matrix;
    CHECK(spectral_radius_matrix(w) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("numerical range of the shift block is the half-radius disk") {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2, 2);
    a(0, 1) = 1.0;
    const NumericalRange r = numerical_range(a, 64);
    CHECK(r.radius == doctest::Approx(0.5).epsilon(1e-8));
    for (const cplx& p : r.boundary) CHECK(std::abs(std::abs(p) - 0.5) <= 1e-8);
}

TEST_CASE("numerical range of a Hermitian matrix is a real segment") {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2, 2);
    a(1, 1) = 1.0;
    const NumericalRange r = numerical_range(a, 32);
    CHECK(r.radius == doctest::Approx(1.0).epsilon(1e-10));
    for (const cplx& p : r.boundary) {
        CHECK(std::abs(p.imag()) <= 1e-8);
        CHECK(p.real() >= -1e-8);
        CHECK(p.real() <= 1.0 + 1e-8);
    }
}

TEST_CASE("norm chain rho <= numerical radius <= norm") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::MatrixXcd a = random_matrix(rng, 3 + int(rng() % 14));
        const double rho = spectral_radius_matrix(a);
        const double nr = numerical_range(a, 32).radius;
        const double nm = operator_norm_estimate(a).value;
        CHECK(rho <= nr + 1e-9);
        CHECK(nr <= nm + 1e-9);
    }
}

TEST_CASE("composition norm sandwich") {
    const auto pinned = cphi_norm_bounds(parse_symbol("z/(2-z)"));
    CHECK(pinned.first == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pinned.second == doctest::Approx(1.0).epsilon(1e-14));

    const auto half = cphi_norm_bounds(parse_symbol("(z+1)/2"));
    CHECK(half.first == doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-10));
    CHECK(half.second == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));

    const auto constant = cphi_norm_bounds(parse_symbol("0.9"));
    CHECK(constant.first == doctest::Approx(2.29416).epsilon(1e-4));
    CHECK(constant.second == doctest::Approx(4.35890).epsilon(1e-4));

    const double nm = operator_norm_estimate(compose_matrix(parse_symbol("(z+1)/2"), 256).matrix).value;
    CHECK(nm >= half.first - 0.02);
    CHECK(nm <= half.second + 1e-9);
}

TEST_CASE("composition spectral radius closed forms") {
    CHECK(cphi_spectral_radius_theory(denjoy_wolff(parse_symbol("z/2"))) == 1.0);
    DenjoyWolffData dw;
    dw.location = DwLocation::boundary;
    dw.point = cplx(1.0);
    dw.multiplier = 0.5;
    CHECK(cphi_spectral_radius_theory(dw) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    dw.multiplier = 1.0;
    CHECK(cphi_spectral_radius_theory(dw) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("essential spectral radius of composition operators") {
    const EssentialRadius cusp = cphi_essential_spectral_radius(parse_symbol("z/(2-z)"));
    CHECK(cusp.value == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));
    CHECK(std::abs(cusp.establishing_point - 1.0) <= 1e-8);
    CHECK_FALSE(cusp.power_compact);

    const EssentialRadius compact = cphi_essential_spectral_radius(parse_symbol("(z+z*z)/4"));
    CHECK(compact.value == 0.0);
    CHECK(compact.power_compact);

    const EssentialRadius squared = cphi_essential_spectral_radius(parse_symbol("z/(4-3*z)"));
    CHECK(squared.value == doctest::Approx(0.5).epsilon(1e-11));

    CHECK_THROWS_AS(cphi_essential_spectral_radius(parse_symbol("exp(z-1)")),
                    UnsupportedRepresentation);
    CHECK_THROWS_AS(cphi_essential_spectral_radius(parse_symbol("(z+1)/2")), HypothesisUnmet);
}

TEST_CASE("weighted spectral radius closed forms") {
    const AnalyticMap cusp = parse_symbol("z/(2-z)");
    const DenjoyWolffData dw = denjoy_wolff(cusp);

    const TheoryRadius big =
        wco_spectral_radius_theory(parse_symbol("2*exp(z)/(2-z)"), cusp, dw);
    CHECK(std::abs(big.value - std::sqrt(2.0) * std::exp(1.0)) <= 1e-12);
    CHECK(big.branch == "interior-essential");

    const TheoryRadius damped = wco_spectral_radius_theory(parse_symbol("exp(-z)"), cusp, dw);
    CHECK(std::abs(damped.value - 1.0) <= 1e-12);
    CHECK(std::abs(damped.essential_term - std::sqrt(2.0) / (2.0 * std::exp(1.0))) <= 1e-12);
    // the damped weight peaks away from the establishing point
    bool flagged = false;
    for (const auto& w : damped.warnings) flagged = flagged || w.find("||psi||_inf") != std::string::npos;
    CHECK(flagged);

    const TheoryRadius compact = wco_spectral_radius_theory(
        parse_symbol("exp(z)"), parse_symbol("(z+z*z)/4"),
        denjoy_wolff(parse_symbol("(z+z*z)/4")));
    CHECK(compact.branch == "interior-power-compact");
    CHECK(std::abs(compact.value - 1.0) <= 1e-12);

    const AnalyticMap shift = parse_symbol("(z+1)/2");
    const TheoryRadius boundary =
        wco_spectral_radius_theory(parse_symbol("exp(z)"), shift, denjoy_wolff(shift));
    CHECK(std::abs(boundary.value - std::exp(1.0) * std::sqrt(2.0)) <= 1e-12);
    CHECK(boundary.branch == "boundary-uci");

    // parabolic boundary point needs the caller to assert UCI
    const AnalyticMap parabolic = parse_symbol("1/(2-z)");
    CHECK_THROWS_AS(wco_spectral_radius_theory(parse_symbol("exp(z)"), parabolic,
                                               denjoy_wolff(parabolic)),
                    HypothesisUnmet);
    const TheoryRadius asserted = wco_spectral_radius_theory(
        parse_symbol("exp(z)/(2-z)"), parabolic, denjoy_wolff(parabolic), {"uci"});
    CHECK(std::abs(asserted.value - std::exp(1.0)) <= 1e-9);
}

TEST_CASE("eigenvalue list") {
    const AnalyticMap phi = parse_symbol("z/2");
    const auto eigs = eigenvalue_list_theory(parse_symbol("exp(z)"), phi, denjoy_wolff(phi), 4);
    REQUIRE(eigs.size() == 6);
    CHECK(std::abs(eigs[0]) == 0.0);
    for (int k = 0; k <= 4; ++k) CHECK(std::abs(eigs[k + 1] - std::pow(0.5, k)) <= 1e-14);
}

TEST_CASE("essential norm lower bound trends to the essential radius") {
    const EssentialLowerBound lb =
        essential_norm_lower(AnalyticMap::constant(1.0), parse_symbol("z/(2-z)"), cplx(1.0));
    REQUIRE(lb.samples.size() >= 10);
    for (std::size_t k = 1; k < lb.samples.size(); ++k)
        CHECK(lb.samples[k].second <= lb.samples[k - 1].second + 1e-9);
    CHECK(lb.samples.back().second >= 0.70);
    CHECK(lb.samples.back().second <= 1.0 / std::sqrt(2.0) + 1e-3);
    CHECK(lb.value >= lb.samples.back().second);
}
