#include "wco/report.hpp"

#include <cmath>

#include "wco/errors.hpp"
#include "wco/expr.hpp"
#include "wco/version.hpp"

namespace wco {

namespace {

nlohmann::json cplx_to_json(const cplx& z) { return nlohmann::json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const nlohmann::json& j) { return cplx(j.at(0).get<double>(), j.at(1).get<double>()); }

Verdict verdict_from_string(const std::string& s) {
    if (s == "yes") return Verdict::yes;
    if (s == "no") return Verdict::no;
    return Verdict::inconclusive;
}

}  // namespace

ReportDocument run_analysis(const AnalysisRequest& request) {
    if (request.trunc_ladder.empty() || request.angles < 16)
        throw PreconditionViolation("run_analysis: need a truncation ladder and angles >= 16");
    for (std::size_t k = 1; k < request.trunc_ladder.size(); ++k)
        if (request.trunc_ladder[k] <= request.trunc_ladder[k - 1])
            throw PreconditionViolation("run_analysis: truncation ladder must be strictly increasing");

    ReportDocument doc;
    doc.request = request;
    doc.core_version = kCoreVersion;

    const AnalyticMap psi = parse_symbol(request.psi_text);
    const AnalyticMap phi = parse_symbol(request.phi_text);
    if (self_map_check(phi) == SelfMapStatus::refuted)
        throw PreconditionViolation("phi is not a self-map of the unit disk");

    doc.denjoy_wolff = denjoy_wolff(phi);
    const DenjoyWolffData& dw = doc.denjoy_wolff;

    SpectralReport& sp = doc.spectral;
    sp.truncation_orders = request.trunc_ladder;
    const int n_max = request.trunc_ladder.back();
    const int n_eval = std::min(n_max, 256);

    sp.norm_estimate = operator_norm_estimate(wco_matrix(psi, phi, n_max).matrix, request.seed).value;
    sp.provenance["norm_estimate"] = "power iteration on the N=" + std::to_string(n_max) + " compression";

    const Eigen::MatrixXcd w_eval = wco_matrix(psi, phi, n_eval).matrix;
    sp.spectral_radius_matrix = spectral_radius_matrix(w_eval);
    sp.provenance["spectral_radius_matrix"] = "eigenvalues of the N=" + std::to_string(n_eval) + " compression";
    sp.gelfand_trace = gelfand_sequence(w_eval, 16, request.seed);
    sp.provenance["gelfand_trace"] = "||A^k||^{1/k}, N=" + std::to_string(n_eval);

    const NumericalRange range = numerical_range(w_eval, request.angles);
    sp.numerical_radius = range.radius;
    sp.numerical_range_boundary = range.boundary;
    sp.provenance["numerical_radius"] = "supporting-line method, N=" + std::to_string(n_eval);

    // Cowen-MacCluer bounds scale only for constant weights
    if (auto c = psi.constant_value()) {
        const auto b = cphi_norm_bounds(phi);
        sp.norm_bounds = {std::abs(*c) * b.first, std::abs(*c) * b.second};
        sp.norm_bounds_apply = true;
        sp.provenance["norm_bounds"] = "composition-operator sandwich scaled by |psi|";
    }

    try {
        const TheoryRadius theory = wco_spectral_radius_theory(psi, phi, dw, request.assertions);
        sp.spectral_radius_theory = theory.value;
        sp.provenance["spectral_radius_theory"] = "closed form, branch " + theory.branch;
        for (const auto& w : theory.warnings) doc.hypothesis_failures.push_back(w);
    } catch (const HypothesisUnmet& e) {
        doc.hypothesis_failures.push_back(e.what());
    } catch (const UnsupportedRepresentation& e) {
        doc.hypothesis_failures.push_back(e.what());
    } catch (const NoConvergence& e) {
        doc.hypothesis_failures.push_back(e.what());
    }

    if (dw.location == DwLocation::interior) {
        try {
            const EssentialRadius ess = cphi_essential_spectral_radius(phi);
            sp.essential_spectral_radius_theory = ess.value;
            sp.provenance["essential_spectral_radius_theory"] =
                ess.power_compact ? "power-compact branch"
                                  : "boundary fixed-point set at n=" + std::to_string(ess.n);
            if (!ess.power_compact) {
                const EssentialLowerBound lb = essential_norm_lower(psi, phi, ess.establishing_point);
                sp.essential_norm_lower = lb.value;
                sp.provenance["essential_norm_lower"] = "kernel sequence along the establishing point";
            }
        } catch (const Error& e) {
            doc.hypothesis_failures.push_back(e.what());
        }
        sp.eigenvalues_theory = eigenvalue_list_theory(psi, phi, dw, 10);
        sp.provenance["eigenvalues_theory"] = "diagonal law psi(a) phi'(a)^k";
    }

    ClassifyOptions opt;
    opt.ladder = request.trunc_ladder;
    opt.angles = request.angles;
    opt.assertions = request.assertions;
    opt.seed = request.seed;
    doc.classification = classify(psi, phi, opt);
    for (const auto& h : doc.classification.hypotheses_unmet) {
        bool dup = false;
        for (const auto& e : doc.hypothesis_failures) dup = dup || e == h;
        if (!dup) doc.hypothesis_failures.push_back(h);
    }
    return doc;
}

nlohmann::json to_json(const ReportDocument& doc) {
    nlohmann::json j;
    j["schema"] = doc.schema;
    j["request"] = {{"psi", doc.request.psi_text},
                    {"phi", doc.request.phi_text},
                    {"trunc", doc.request.trunc_ladder},
                    {"angles", doc.request.angles},
                    {"assertions", doc.request.assertions},
                    {"out", doc.request.output_path},
                    {"seed", doc.request.seed}};
    j["denjoy_wolff"] = {
        {"point", cplx_to_json(doc.denjoy_wolff.point)},
        {"multiplier", doc.denjoy_wolff.multiplier},
        {"location", doc.denjoy_wolff.location == DwLocation::interior ? "interior" : "boundary"},
        {"method",
         doc.denjoy_wolff.method == DwMethod::closed_form ? "closed_form" : "orbit_iteration"},
        {"residual", doc.denjoy_wolff.residual}};

    nlohmann::json s;
    const SpectralReport& sp = doc.spectral;
    s["norm_estimate"] = sp.norm_estimate;
    if (sp.norm_bounds_apply)
        s["norm_bounds"] = nlohmann::json::array({sp.norm_bounds.first, sp.norm_bounds.second});
    s["spectral_radius_matrix"] = sp.spectral_radius_matrix;
    if (sp.spectral_radius_theory) s["spectral_radius_theory"] = *sp.spectral_radius_theory;
    s["gelfand_trace"] = nlohmann::json::array();
    for (const auto& [k, v] : sp.gelfand_trace) s["gelfand_trace"].push_back({k, v});
    if (sp.essential_spectral_radius_theory)
        s["essential_spectral_radius_theory"] = *sp.essential_spectral_radius_theory;
    if (sp.essential_norm_lower) s["essential_norm_lower"] = *sp.essential_norm_lower;
    s["numerical_radius"] = sp.numerical_radius;
    s["numerical_range_boundary"] = nlohmann::json::array();
    for (const auto& z : sp.numerical_range_boundary)
        s["numerical_range_boundary"].push_back(cplx_to_json(z));
    if (sp.eigenvalues_theory) {
        s["eigenvalues_theory"] = nlohmann::json::array();
        for (const auto& z : *sp.eigenvalues_theory) s["eigenvalues_theory"].push_back(cplx_to_json(z));
    }
    s["truncation_orders"] = sp.truncation_orders;
    s["provenance"] = sp.provenance;
    j["spectral"] = s;

    nlohmann::json c;
    const ClassificationVerdict& cv = doc.classification;
    c["normaloid"] = to_string(cv.normaloid);
    c["spectraloid"] = to_string(cv.spectraloid);
    c["essentially_normaloid"] = to_string(cv.essentially_normaloid);
    c["convexoid_equiv_spectraloid"] = cv.convexoid_equiv_spectraloid;
    c["weight_form"] = cv.weight_form == WeightForm::matches   ? "matches"
                       : cv.weight_form == WeightForm::differs ? "differs"
                                                               : "na";
    c["psi2_necessary"] = cv.psi2_necessary == Psi2::passes  ? "passes"
                          : cv.psi2_necessary == Psi2::fails ? "fails"
                                                             : "na";
    c["evidence"] = nlohmann::json::array();
    for (const auto& e : cv.evidence)
        c["evidence"].push_back({{"claim", e.claim},
                                 {"theory", e.theory},
                                 {"observed", e.observed},
                                 {"ladder", e.ladder},
                                 {"tolerance", e.tolerance},
                                 {"note", e.note}});
    c["hypotheses_unmet"] = cv.hypotheses_unmet;
    j["classification"] = c;

    j["versions"] = {{"core", doc.core_version}};
    j["hypothesis_failures"] = doc.hypothesis_failures;
    return j;
}

ReportDocument report_from_json(const nlohmann::json& j) {
    ReportDocument doc;
    doc.schema = j.at("schema").get<int>();
    const auto& r = j.at("request");
    doc.request.psi_text = r.at("psi").get<std::string>();
    doc.request.phi_text = r.at("phi").get<std::string>();
    doc.request.trunc_ladder = r.at("trunc").get<std::vector<int>>();
    doc.request.angles = r.at("angles").get<int>();
    doc.request.assertions = r.at("assertions").get<std::set<std::string>>();
    doc.request.output_path = r.at("out").get<std::string>();
    doc.request.seed = r.at("seed").get<std::uint64_t>();

    const auto& d = j.at("denjoy_wolff");
    doc.denjoy_wolff.point = cplx_from_json(d.at("point"));
    doc.denjoy_wolff.multiplier = d.at("multiplier").get<double>();
    doc.denjoy_wolff.location = d.at("location").get<std::string>() == "interior"
                                    ? DwLocation::interior
                                    : DwLocation::boundary;
    doc.denjoy_wolff.method = d.at("method").get<std::string>() == "closed_form"
                                  ? DwMethod::closed_form
                                  : DwMethod::orbit_iteration;
    doc.denjoy_wolff.residual = d.at("residual").get<double>();

    const auto& s = j.at("spectral");
    SpectralReport& sp = doc.spectral;
    sp.norm_estimate = s.at("norm_estimate").get<double>();
    if (s.contains("norm_bounds")) {
        sp.norm_bounds = {s["norm_bounds"].at(0).get<double>(), s["norm_bounds"].at(1).get<double>()};
        sp.norm_bounds_apply = true;
    }
    sp.spectral_radius_matrix = s.at("spectral_radius_matrix").get<double>();
    if (s.contains("spectral_radius_theory"))
        sp.spectral_radius_theory = s["spectral_radius_theory"].get<double>();
    for (const auto& pair : s.at("gelfand_trace"))
        sp.gelfand_trace.emplace_back(pair.at(0).get<int>(), pair.at(1).get<double>());
    if (s.contains("essential_spectral_radius_theory"))
        sp.essential_spectral_radius_theory = s["essential_spectral_radius_theory"].get<double>();
    if (s.contains("essential_norm_lower"))
        sp.essential_norm_lower = s["essential_norm_lower"].get<double>();
    sp.numerical_radius = s.at("numerical_radius").get<double>();
    for (const auto& p : s.at("numerical_range_boundary"))
        sp.numerical_range_boundary.push_back(cplx_from_json(p));
    if (s.contains("eigenvalues_theory")) {
        std::vector<cplx> eigs;
        for (const auto& p : s["eigenvalues_theory"]) eigs.push_back(cplx_from_json(p));
        sp.eigenvalues_theory = std::move(eigs);
    }
    sp.truncation_orders = s.at("truncation_orders").get<std::vector<int>>();
    sp.provenance = s.at("provenance").get<std::map<std::string, std::string>>();

    const auto& c = j.at("classification");
    ClassificationVerdict& cv = doc.classification;
    cv.normaloid = verdict_from_string(c.at("normaloid").get<std::string>());
    cv.spectraloid = verdict_from_string(c.at("spectraloid").get<std::string>());
    cv.essentially_normaloid = verdict_from_string(c.at("essentially_normaloid").get<std::string>());
    cv.convexoid_equiv_spectraloid = c.at("convexoid_equiv_spectraloid").get<bool>();
    const std::string wf = c.at("weight_form").get<std::string>();
    cv.weight_form = wf == "matches" ? WeightForm::matches
                     : wf == "differs" ? WeightForm::differs
                                       : WeightForm::na;
    const std::string p2 = c.at("psi2_necessary").get<std::string>();
    cv.psi2_necessary = p2 == "passes" ? Psi2::passes : p2 == "fails" ? Psi2::fails : Psi2::na;
    for (const auto& e : c.at("evidence"))
        cv.evidence.push_back(EvidenceItem{e.at("claim").get<std::string>(),
                                           e.at("theory").get<double>(),
                                           e.at("observed").get<double>(),
                                           e.at("ladder").get<std::vector<int>>(),
                                           e.at("tolerance").get<double>(),
                                           e.at("note").get<std::string>()});
    cv.hypotheses_unmet = c.at("hypotheses_unmet").get<std::vector<std::string>>();

    doc.core_version = j.at("versions").at("core").get<std::string>();
    doc.hypothesis_failures = j.at("hypothesis_failures").get<std::vector<std::string>>();
    return doc;
}

}  // namespace wco
