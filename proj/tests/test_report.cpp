#include <doctest.h>

#include <cmath>

#include "wco/errors.hpp"
#include "wco/report.hpp"

using namespace wco;

TEST_CASE("analysis pipeline produces a coherent report") {
    AnalysisRequest req;
    req.psi_text = "2*exp(z)/(2-z)";
    req.phi_text = "z/(2-z)";
    req.trunc_ladder = {16, 32, 64};
    const ReportDocument doc = run_analysis(req);

    CHECK(doc.schema == 1);
    CHECK(doc.denjoy_wolff.location == DwLocation::interior);
    REQUIRE(doc.spectral.spectral_radius_theory.has_value());
    CHECK(std::abs(*doc.spectral.spectral_radius_theory - std::sqrt(2.0) * std::exp(1.0)) <=
          1e-12);
    REQUIRE(doc.spectral.essential_spectral_radius_theory.has_value());
    CHECK(std::abs(*doc.spectral.essential_spectral_radius_theory - 1.0 / std::sqrt(2.0)) <=
          1e-12);

    // matrix facts on the evaluation truncation
    CHECK(doc.spectral.spectral_radius_matrix <= doc.spectral.numerical_radius + 1e-9);
    CHECK(doc.spectral.numerical_radius <= doc.spectral.norm_estimate + 1e-9);
    CHECK(doc.spectral.truncation_orders == req.trunc_ladder);
    CHECK_FALSE(doc.spectral.numerical_range_boundary.empty());
    REQUIRE(doc.spectral.eigenvalues_theory.has_value());
    CHECK(std::abs((*doc.spectral.eigenvalues_theory)[1] - cplx(1.0)) <= 1e-12);
}

TEST_CASE("JSON serialization round-trips") {
    AnalysisRequest req;
    req.psi_text = "exp(-z)";
    req.phi_text = "z/(2-z)";
    req.trunc_ladder = {16, 32};
    req.angles = 24;
    req.seed = 777;
    const ReportDocument doc = run_analysis(req);
    const nlohmann::json j = to_json(doc);
    const ReportDocument back = report_from_json(j);
    CHECK(to_json(back) == j);
}

TEST_CASE("constant weights carry the composition norm sandwich") {
    AnalysisRequest req;
    req.psi_text = "2";
    req.phi_text = "(z+1)/2";
    req.trunc_ladder = {16, 32, 64};
    const ReportDocument doc = run_analysis(req);
    REQUIRE(doc.spectral.norm_bounds_apply);
    CHECK(doc.spectral.norm_bounds.first == doctest::Approx(2.0 * std::sqrt(4.0 / 3.0)));
    CHECK(doc.spectral.norm_bounds.second == doctest::Approx(2.0 * std::sqrt(3.0)));
    CHECK(doc.spectral.norm_estimate >= doc.spectral.norm_bounds.first - 0.05);
    CHECK(doc.spectral.norm_estimate <= doc.spectral.norm_bounds.second + 1e-9);
}

TEST_CASE("unmet hypotheses are reported, not fatal") {
    AnalysisRequest req;
    req.psi_text = "exp(z)";
    req.phi_text = "1/(2-z)";  // parabolic boundary point, UCI not certifiable
    req.trunc_ladder = {16, 32};
    const ReportDocument doc = run_analysis(req);
    CHECK_FALSE(doc.spectral.spectral_radius_theory.has_value());
    CHECK_FALSE(doc.hypothesis_failures.empty());
}

TEST_CASE("request validation") {
    AnalysisRequest req;
    req.phi_text = "z/2";
    req.trunc_ladder = {32, 16};
    CHECK_THROWS_AS(run_analysis(req), PreconditionViolation);
    req.trunc_ladder = {16, 32};
    req.angles = 8;
    CHECK_THROWS_AS(run_analysis(req), PreconditionViolation);
    req.angles = 16;
    req.phi_text = "2*z";
    CHECK_THROWS_AS(run_analysis(req), PreconditionViolation);
}
