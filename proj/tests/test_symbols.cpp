#include <doctest.h>

#include <cmath>
#include <random>

#include "wco/errors.hpp"
#include "wco/expr.hpp"
#include "wco/symbols.hpp"

using namespace wco;

TEST_CASE("self-map screening") {
    CHECK(self_map_check(parse_symbol("z/2")) == SelfMapStatus::verified);
    CHECK(self_map_check(parse_symbol("z/(2-z)")) == SelfMapStatus::verified);
    CHECK(self_map_check(parse_symbol("2*z")) == SelfMapStatus::refuted);
    CHECK(self_map_check(parse_symbol("exp(z)")) == SelfMapStatus::refuted);
    CHECK(self_map_check(parse_symbol("0.3")) == SelfMapStatus::verified);
    // non-Mobius self-maps are only screened, never certified
    CHECK(self_map_check(parse_symbol("(z+z*z)/4")) == SelfMapStatus::unknown);
}

TEST_CASE("Denjoy-Wolff closed forms") {
    const DenjoyWolffData half = denjoy_wolff(parse_symbol("z/2"));
    CHECK(half.location == DwLocation::interior);
    CHECK(std::abs(half.point) <= 1e-12);
    CHECK(half.multiplier == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(half.method == DwMethod::closed_form);

    const DenjoyWolffData cusp = denjoy_wolff(parse_symbol("z/(2-z)"));
    CHECK(cusp.location == DwLocation::interior);
    CHECK(std::abs(cusp.point) <= 1e-12);
    CHECK(cusp.multiplier == doctest::Approx(0.5).epsilon(1e-12));

    const DenjoyWolffData shift = denjoy_wolff(parse_symbol("(z+1)/2"));
    CHECK(shift.location == DwLocation::boundary);
    CHECK(std::abs(shift.point - 1.0) <= 1e-12);
    CHECK(shift.multiplier == doctest::Approx(0.5).epsilon(1e-12));

    const DenjoyWolffData parabolic = denjoy_wolff(parse_symbol("1/(2-z)"));
    CHECK(parabolic.location == DwLocation::boundary);
    CHECK(std::abs(parabolic.point - 1.0) <= 1e-12);
    CHECK(parabolic.multiplier == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("orbit iteration agrees with the closed form") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 15; ++trial) {
        const cplx a = 0.7 * unit(rng) * std::polar(1.0, 2.0 * M_PI * unit(rng));
        const cplx s = (0.1 + 0.7 * unit(rng)) * std::polar(1.0, 2.0 * M_PI * unit(rng));
        auto [zeta, tau] = conjugation_pair(a);
        const AnalyticMap phi =
            compose(tau, compose(AnalyticMap::mobius(s, 0.0, 0.0, 1.0), tau));
        const DenjoyWolffData closed = denjoy_wolff(phi);
        const DenjoyWolffData orbit = denjoy_wolff_orbit(phi);
        REQUIRE(closed.location == DwLocation::interior);
        CHECK(std::abs(closed.point - a) <= 1e-10);
        CHECK(std::abs(orbit.point - a) <= 1e-8);
        CHECK(orbit.multiplier == doctest::Approx(std::abs(s)).epsilon(1e-6));
    }
}

TEST_CASE("orbit iteration reaches a boundary point for transcendental maps") {
    // phi(z) = exp(z-1): fixed point 1 with phi'(1) = 1 approached radially
    const AnalyticMap phi =
        AnalyticMap::exp_of(AnalyticMap::polynomial({cplx(-1.0), cplx(1.0)}));
    const DenjoyWolffData dw = denjoy_wolff(phi);
    CHECK(dw.location == DwLocation::boundary);
    CHECK(std::abs(dw.point - 1.0) <= 1e-6);
    CHECK(dw.multiplier == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("elliptic automorphisms are rejected") {
    // rotation: interior fixed point with |multiplier| = 1
    CHECK_THROWS_AS(denjoy_wolff(parse_symbol("i*z")), NoConvergence);
}

TEST_CASE("unimodular fixed points of the iterates") {
    const AnalyticMap phi = parse_symbol("z/(2-z)");
    const auto fps = boundary_fixed_points(phi, 2);
    bool found_n1 = false, found_n2 = false;
    for (const auto& fp : fps) {
        if (fp.n == 1 && std::abs(fp.point - 1.0) <= 1e-10) {
            found_n1 = true;
            CHECK(std::abs(fp.multiplier - 2.0) <= 1e-10);
        }
        if (fp.n == 2 && std::abs(fp.point - 1.0) <= 1e-10) {
            found_n2 = true;
            CHECK(std::abs(fp.multiplier - 4.0) <= 1e-10);  // chain rule along the cycle
        }
    }
    CHECK(found_n1);
    CHECK(found_n2);
    CHECK_THROWS_AS(boundary_fixed_points(parse_symbol("exp(z-1)"), 1),
                    UnsupportedRepresentation);
}

TEST_CASE("unit-circle images of Mobius self-maps") {
    const auto m = parse_symbol("z/(2-z)").as_mobius();
    REQUIRE(m.has_value());
    const Circle c = mobius_unit_circle_image(*m);
    CHECK(std::abs(c.center - cplx(1.0 / 3.0)) <= 1e-12);
    CHECK(c.radius == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("uci sufficient condition") {
    const AnalyticMap shift = parse_symbol("(z+1)/2");
    const DenjoyWolffData dw = denjoy_wolff(shift);
    const UciCertificate cert = uci_sufficient(shift, dw);
    CHECK(cert.certified);

    // multiplier 1 leaves the test inconclusive
    const AnalyticMap parabolic = parse_symbol("1/(2-z)");
    CHECK_FALSE(uci_sufficient(parabolic, denjoy_wolff(parabolic)).certified);
}

TEST_CASE("kernel functions") {
    const cplx a(0.3, 0.4);
    const KernelFunction k = kernel(a);
    const AnalyticMap km = kernel_as_map(a);
    for (int j = 0; j < 16; ++j) {
        const cplx z = 0.9 * std::sqrt((j + 0.5) / 16.0) * std::polar(1.0, 0.7 * j);
        const cplx expected = 1.0 / (1.0 - std::conj(a) * z);
        CHECK(std::abs(k(z) - expected) <= 1e-14);
        CHECK(std::abs(km.eval(z) - expected) <= 1e-13);
    }
    CHECK_THROWS_AS(kernel_as_map(cplx(1.0)), AnchorNotInterior);
}

TEST_CASE("canonical weight and conjugation identities") {
    const cplx a(0.5, -0.2);
    auto [zeta, tau] = conjugation_pair(a);

    // tau is an involution interchanging 0 and a
    CHECK(std::abs(tau.eval(cplx(0.0)) - a) <= 1e-13);
    CHECK(std::abs(tau.eval(a)) <= 1e-13);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int j = 0; j < 40; ++j) {
        const cplx z = 0.95 * unit(rng) * std::polar(1.0, 2.0 * M_PI * unit(rng));
        CHECK(std::abs(tau.eval(tau.eval(z)) - z) <= 1e-11);
        // |zeta|^2 = (1-|a|^2)/|1-conj(a)z|^2, the kernel normalization
        const double expected = (1.0 - std::norm(a)) / std::norm(1.0 - std::conj(a) * z);
        CHECK(std::norm(zeta.eval(z)) == doctest::Approx(expected).epsilon(1e-10));
    }

    const AnalyticMap phi = compose(tau, compose(AnalyticMap::mobius(0.4, 0.0, 0.0, 1.0), tau));
    const cplx c(1.3, 0.25);
    const AnalyticMap psi = canonical_weight(phi, a, c);
    CHECK(std::abs(psi.eval(a) - c) <= 1e-12);

    // quotient-of-kernels form equals the cleared rational form at 1e-10
    const cplx abar = std::conj(a);
    for (int j = 0; j < 40; ++j) {
        const cplx z = 0.9 * unit(rng) * std::polar(1.0, 2.0 * M_PI * unit(rng));
        const cplx kernel_quotient =
            c * (1.0 / (1.0 - abar * z)) / (1.0 / (1.0 - abar * phi.eval(z)));
        CHECK(std::abs(psi.eval(z) - kernel_quotient) <= 1e-10);
    }

    auto [f, g] = conjugated_symbols(psi, phi, a);
    CHECK(std::abs(g.eval(cplx(0.0))) <= 1e-12);
    for (int j = 0; j < 40; ++j) {
        const cplx z = 0.9 * unit(rng) * std::polar(1.0, 2.0 * M_PI * unit(rng));
        CHECK(std::abs(f.eval(z) - c) <= 1e-9);
    }

    CHECK_THROWS_AS(canonical_weight(parse_symbol("z/2"), cplx(0.5), cplx(1.0)), NotFixedPoint);
}

TEST_CASE("boundary values and sup norms") {
    CHECK(std::abs(value_at_boundary(parse_symbol("exp(z)"), cplx(1.0)) - std::exp(1.0)) <= 1e-12);
    CHECK(std::abs(value_at_boundary(parse_symbol("1/(2-z)"), cplx(1.0)) - 1.0) <= 1e-12);
    CHECK(sup_norm_estimate(parse_symbol("exp(z)")) == doctest::Approx(std::exp(1.0)).epsilon(1e-6));
    CHECK(sup_norm_estimate(parse_symbol("z/2")) == doctest::Approx(0.5).epsilon(1e-6));
}
