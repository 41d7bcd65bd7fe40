#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wco/classify.hpp"

namespace wco {

struct AnalysisRequest {
    std::string psi_text = "1";
    std::string phi_text;
    std::vector<int> trunc_ladder = {32, 64, 128, 256, 512};
    int angles = 64;
    std::set<std::string> assertions;  // univalent | non_inner | uci
    std::string output_path;
    std::uint64_t seed = 12345;
};

struct SpectralReport {
    double norm_estimate = 0.0;
    std::pair<double, double> norm_bounds{0.0, 0.0};
    bool norm_bounds_apply = false;  // constant-weight case only
    double spectral_radius_matrix = 0.0;
    std::optional<double> spectral_radius_theory;
    std::vector<std::pair<int, double>> gelfand_trace;
    std::optional<double> essential_spectral_radius_theory;
    std::optional<double> essential_norm_lower;
    double numerical_radius = 0.0;
    std::vector<cplx> numerical_range_boundary;
    std::optional<std::vector<cplx>> eigenvalues_theory;
    std::vector<int> truncation_orders;
    std::map<std::string, std::string> provenance;
};

struct ReportDocument {
    int schema = 1;
    AnalysisRequest request;
    DenjoyWolffData denjoy_wolff;
    SpectralReport spectral;
    ClassificationVerdict classification;
    std::string core_version;
    std::vector<std::string> hypothesis_failures;  // nonempty => exit code 2 path
};

// Full pipeline: parse, Denjoy-Wolff, truncation ladder, spectra, classify.
ReportDocument run_analysis(const AnalysisRequest& request);

nlohmann::json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);

}  // namespace wco
