#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wco/errors.hpp"
#include "wco/expr.hpp"
#include "wco/report.hpp"
#include "wco/verify.hpp"

namespace {

int error_json(const std::string& kind, const std::string& message) {
    nlohmann::json j{{"error", kind}, {"message", message}};
    std::cerr << j.dump(2) << "\n";
    return 1;
}

void parse_ladder(const std::string& text, std::vector<int>& out) {
    out.clear();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
}

int cmd_analyze(const wco::AnalysisRequest& request) {
    const wco::ReportDocument doc = wco::run_analysis(request);
    const std::string text = wco::to_json(doc).dump(2) + "\n";
    if (request.output_path.empty() || request.output_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(request.output_path);
        if (!out) return error_json("io", "cannot open " + request.output_path);
        out << text;
    }
    return doc.hypothesis_failures.empty() || doc.spectral.spectral_radius_theory ? 0 : 2;
}

int cmd_verify_paper() {
    const auto rows = wco::verify_suite();
    bool all = true;
    std::printf("%-4s %-70s %-6s %8s\n", "#", "criterion", "status", "seconds");
    for (const auto& r : rows) {
        all = all && r.passed;
        std::printf("%-4d %-70s %-6s %8.2f\n", r.index, r.name.c_str(),
                    r.passed ? "pass" : "FAIL", r.seconds);
        std::printf("     expected:  %s\n", r.expected.c_str());
        std::printf("     observed:  %s\n", r.observed.c_str());
        std::printf("     tolerance: %s\n", r.tolerance.c_str());
    }
    return all ? 0 : 1;
}

int cmd_range(const wco::AnalysisRequest& request, const std::string& svg_path) {
    const wco::AnalyticMap psi = wco::parse_symbol(request.psi_text);
    const wco::AnalyticMap phi = wco::parse_symbol(request.phi_text);
    if (wco::self_map_check(phi) == wco::SelfMapStatus::refuted)
        throw wco::PreconditionViolation("phi is not a self-map of the unit disk");
    const int n = request.trunc_ladder.back();
    const wco::NumericalRange range =
        wco::numerical_range(wco::wco_matrix(psi, phi, n).matrix, request.angles);

    std::ostringstream csv;
    csv << "theta,re,im\n";
    csv.precision(17);
    for (std::size_t k = 0; k < range.boundary.size(); ++k) {
        const double theta = 2.0 * M_PI * double(k) / double(range.boundary.size());
        csv << theta << "," << range.boundary[k].real() << "," << range.boundary[k].imag() << "\n";
    }
    if (request.output_path.empty() || request.output_path == "-") {
        std::cout << csv.str();
    } else {
        std::ofstream out(request.output_path);
        if (!out) return error_json("io", "cannot open " + request.output_path);
        out << csv.str();
    }

    if (!svg_path.empty()) {
        double extent = 1e-9;
        for (const auto& z : range.boundary) extent = std::max({extent, std::abs(z.real()), std::abs(z.imag())});
        const double scale = 220.0 / extent;
        std::ofstream svg(svg_path);
        if (!svg) return error_json("io", "cannot open " + svg_path);
        svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" "
               "viewBox=\"0 0 480 480\">\n  <polygon points=\"";
        svg.precision(6);
        for (const auto& z : range.boundary)
            svg << 240.0 + scale * z.real() << "," << 240.0 - scale * z.imag() << " ";
        svg << "\" fill=\"none\" stroke=\"black\"/>\n</svg>\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted composition operators on the Hardy space: matrices, spectra, verdicts"};
    app.require_subcommand(1);

    wco::AnalysisRequest request;
    std::string trunc_text = "32,64,128,256,512";
    std::vector<std::string> assert_list;
    std::string svg_path;

    auto add_common = [&](CLI::App* cmd, bool needs_psi) {
        cmd->add_option("--psi", request.psi_text, "weight symbol (default 1)");
        cmd->add_option("--phi", request.phi_text, "composition symbol")->required();
        cmd->add_option("--trunc", trunc_text, "truncation ladder, comma separated");
        cmd->add_option("--angles", request.angles, "supporting-line angles (>= 16)");
        cmd->add_option("--assert", assert_list,
                        "caller-asserted hypotheses: univalent, non_inner, uci")
            ->delimiter(',');
        cmd->add_option("--seed", request.seed, "power-iteration seed");
        cmd->add_option("--out", request.output_path, "output path ('-' for stdout)");
        (void)needs_psi;
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full pipeline, JSON report");
    add_common(analyze, true);
    CLI::App* verify = app.add_subcommand("verify-paper", "run the regression table");
    CLI::App* rangec = app.add_subcommand("range", "numerical-range boundary as CSV");
    add_common(rangec, true);
    rangec->add_option("--svg", svg_path, "also write an SVG polygon");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return cmd_verify_paper();
        parse_ladder(trunc_text, request.trunc_ladder);
        request.assertions = std::set<std::string>(assert_list.begin(), assert_list.end());
        if (*analyze) return cmd_analyze(request);
        return cmd_range(request, svg_path);
    } catch (const wco::SyntaxError& e) {
        return error_json("syntax", e.what());
    } catch (const wco::HypothesisUnmet& e) {
        return error_json("hypothesis", e.what());
    } catch (const wco::Error& e) {
        return error_json("domain", e.what());
    } catch (const std::exception& e) {
        return error_json("internal", e.what());
    }
}
