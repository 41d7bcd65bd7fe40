#include "wco/classify.hpp"

#include <cmath>
#include <numbers>

#include "wco/errors.hpp"

namespace wco {

namespace {

constexpr double kGolden = 0.6180339887498949;

std::vector<cplx> quasi_random_disk_points(int count, double rmax = 0.95) {
    std::vector<cplx> pts;
    pts.reserve(count);
    for (int k = 0; k < count; ++k) {
        const double r = rmax * std::sqrt((k + 0.5) / count);
        const double frac = std::fmod(k * kGolden, 1.0);
        pts.push_back(r * std::polar(1.0, 2.0 * std::numbers::pi * frac));
    }
    return pts;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "inconclusive";
    }
}

WeightForm weight_form_test(const AnalyticMap& psi, const AnalyticMap& phi, cplx a) {
    if (std::abs(a) >= 1.0) throw AnchorNotInterior("weight_form_test: |a| < 1 required");
    if (std::abs(phi.eval(a) - a) > 1e-10) throw NotFixedPoint("weight_form_test: phi(a) != a");
    const AnalyticMap reference = canonical_weight(phi, a, psi.eval(a));
    for (const cplx& z : quasi_random_disk_points(200)) {
        const cplx expected = reference.eval(z);
        const double dev = std::abs(psi.eval(z) - expected) / std::max(std::abs(expected), 1e-6);
        if (dev > 1e-8) return WeightForm::differs;
    }
    return WeightForm::matches;
}

Psi2Result psi2_check(const AnalyticMap& psi, cplx a) {
    Psi2Result out;
    const int n = 256;
    const Series c = psi.taylor(n);
    double sum = 0.0;
    for (const auto& v : c) sum += std::norm(v);
    // geometric tail estimate from the trailing coefficient ratio
    const double last = std::abs(c[n - 1]);
    const double prev = std::abs(c[n - 2]);
    if (last > 0.0 && prev > 0.0 && last < prev) {
        const double q2 = (last / prev) * (last / prev);
        sum += last * last * q2 / (1.0 - q2);
    }
    out.psi_h2 = std::sqrt(sum);
    out.psi_at_a =
        std::abs(std::abs(a) < 1.0 - 1e-9 ? psi.eval(a) : value_at_boundary(psi, a));
    out.verdict = out.psi_h2 <= out.psi_at_a + 1e-9 ? Psi2::passes : Psi2::fails;
    return out;
}

namespace {

struct LadderData {
    std::vector<double> norms;
    bool monotone = true;
    bool stabilized = false;
};

LadderData norm_ladder(const AnalyticMap& psi, const AnalyticMap& phi,
                       const std::vector<int>& ns, std::uint64_t seed) {
    LadderData out;
    for (int n : ns) {
        const OperatorTruncation w = wco_matrix(psi, phi, n);
        out.norms.push_back(operator_norm_estimate(w.matrix, seed).value);
    }
    for (std::size_t k = 1; k < out.norms.size(); ++k)
        if (out.norms[k] < out.norms[k - 1] - 1e-9) out.monotone = false;
    if (out.norms.size() >= 2) {
        const double rel = std::abs(out.norms.back() - out.norms[out.norms.size() - 2]) /
                           std::max(out.norms.back(), 1e-30);
        out.stabilized = rel <= 0.005;
    }
    return out;
}

}  // namespace

ClassificationVerdict classify(const AnalyticMap& psi, const AnalyticMap& phi,
                               const ClassifyOptions& opt) {
    if (self_map_check(phi) == SelfMapStatus::refuted)
        throw PreconditionViolation("classify: phi is not a self-map of the disk");

    ClassificationVerdict v;
    const DenjoyWolffData dw = denjoy_wolff(phi);
    const int n_max = opt.ladder.back();

    LadderData ladder = norm_ladder(psi, phi, opt.ladder, opt.seed);
    const double norm_last = ladder.norms.back();
    const bool ladder_stable =
        ladder.stabilized ||
        std::abs(ladder.norms.back() - ladder.norms[ladder.norms.size() - 2]) <=
            opt.stabilization * std::max(norm_last, 1e-30);

    // theory spectral radius (may fail on unmet hypotheses; recorded, not fatal)
    bool have_theory = false;
    TheoryRadius theory;
    try {
        theory = wco_spectral_radius_theory(psi, phi, dw, opt.assertions);
        have_theory = true;
        for (const auto& w : theory.warnings) v.hypotheses_unmet.push_back(w);
    } catch (const HypothesisUnmet& e) {
        v.hypotheses_unmet.push_back(e.what());
    } catch (const UnsupportedRepresentation& e) {
        v.hypotheses_unmet.push_back(e.what());
    } catch (const NoConvergence& e) {
        v.hypotheses_unmet.push_back(e.what());
    }

    // numerical radius evidence on a mid-size truncation
    const int n_range = std::min(n_max, 256);
    const NumericalRange range = numerical_range(wco_matrix(psi, phi, n_range).matrix, opt.angles);

    double certified_lower = norm_last;  // compression norm never exceeds ||W||
    std::string lower_note = "compression norm at N=" + std::to_string(n_max);

    if (dw.location == DwLocation::interior) {
        const cplx a = dw.point;
        v.weight_form = weight_form_test(psi, phi, a);
        const Psi2Result p2 = psi2_check(psi, a);
        const double psi_a = std::abs(psi.eval(a));

        const bool rho_is_psi_a = have_theory && std::abs(theory.value - psi_a) <= 1e-12 * std::max(psi_a, 1.0);
        if (rho_is_psi_a) {
            v.psi2_necessary = p2.verdict;
            if (p2.psi_h2 > certified_lower) {
                certified_lower = p2.psi_h2;
                lower_note = "||W 1|| = ||psi||_2";
            }
        }
        v.evidence.push_back(EvidenceItem{"weight form vs canonical psi(a) K_a/(K_a o phi)", 0.0,
                                          v.weight_form == WeightForm::matches ? 1.0 : 0.0,
                                          {}, 1e-8, ""});
        v.evidence.push_back(
            EvidenceItem{"||psi||_2 <= |psi(a)|", p2.psi_at_a, p2.psi_h2, {}, 1e-9, ""});

        if (dw.location == DwLocation::interior && !theory.branch.empty() &&
            theory.branch == "interior-essential") {
            // essential radius resolved through boundary fixed points: C_phi is
            // essentially normaloid there and the property transfers to W
            v.essentially_normaloid = Verdict::yes;
        }
    }

    if (have_theory) {
        v.evidence.push_back(EvidenceItem{"norm ladder vs rho theory (" + theory.branch + ")",
                                          theory.value, norm_last, opt.ladder,
                                          opt.tol_rel, ""});
        if (certified_lower > theory.value * (1.0 + opt.tol_rel)) {
            v.normaloid = Verdict::no;
            v.evidence.push_back(EvidenceItem{"certified lower bound exceeds rho: " + lower_note,
                                              theory.value, certified_lower, {}, opt.tol_rel, ""});
        } else if (std::abs(norm_last - theory.value) <= opt.tol_rel * theory.value &&
                   ladder.monotone && ladder_stable) {
            v.normaloid = Verdict::yes;
        } else {
            v.normaloid = Verdict::inconclusive;
        }

        // spectraloid: compression numerical radius is a lower bound for r(W)
        v.evidence.push_back(EvidenceItem{"numerical radius vs rho theory", theory.value,
                                          range.radius, {n_range}, opt.tol_rel, ""});
        if (range.radius > theory.value * (1.0 + opt.tol_rel)) {
            v.spectraloid = Verdict::no;
        } else if (std::abs(range.radius - theory.value) <= opt.tol_rel * theory.value) {
            v.spectraloid = Verdict::yes;
        }
    }

    if (dw.location == DwLocation::boundary) {
        const bool parabolic = dw.multiplier >= 1.0 - 1e-9;
        if (parabolic) {
            v.evidence.push_back(EvidenceItem{
                "C_phi not normaloid (boundary multiplier 1)", 1.0,
                dw.multiplier, {}, 1e-9, "norm of C_phi exceeds rho = 1"});
        } else {
            // transfer path: ||psi||_inf attained at a and C_phi itself normaloid
            const double sup = sup_norm_estimate(psi);
            const double psi_a = std::abs(value_at_boundary(psi, dw.point));
            const bool attained = psi_a >= sup * (1.0 - 1e-6);
            LadderData cladder{{}, true, false};
            for (int n : opt.ladder)
                cladder.norms.push_back(
                    operator_norm_estimate(compose_matrix(phi, n).matrix, opt.seed).value);
            const double cnorm = cladder.norms.back();
            const double rho_c = 1.0 / std::sqrt(dw.multiplier);
            const bool cphi_normaloid_evidence =
                std::abs(cnorm - rho_c) <= opt.tol_rel * rho_c &&
                std::abs(cladder.norms.back() - cladder.norms[cladder.norms.size() - 2]) <=
                    opt.stabilization * cnorm;
            v.evidence.push_back(EvidenceItem{"||psi||_inf attained at Denjoy-Wolff point", sup,
                                              psi_a, {}, 1e-6, ""});
            v.evidence.push_back(EvidenceItem{"C_phi norm ladder vs multiplier^{-1/2}", rho_c,
                                              cnorm, opt.ladder, opt.tol_rel, ""});
            if (attained && cphi_normaloid_evidence && have_theory &&
                v.normaloid == Verdict::inconclusive)
                v.normaloid = Verdict::yes;
        }
        const UciCertificate uci = uci_sufficient(phi, dw);
        v.convexoid_equiv_spectraloid =
            (uci.certified || opt.assertions.count("uci")) && dw.multiplier < 1.0 - 1e-9;
    }

    // normaloid implies spectraloid; never report a contradiction
    if (v.normaloid == Verdict::yes && v.spectraloid == Verdict::no) {
        v.spectraloid = Verdict::inconclusive;
        v.evidence.push_back(EvidenceItem{
            "spectraloid downgraded: normaloid yes forbids spectraloid no", 0.0, 0.0, {}, 0.0,
            "verdict coherence"});
    }
    if (v.normaloid == Verdict::yes && v.spectraloid == Verdict::inconclusive)
        v.spectraloid = Verdict::yes;  // implication chain
    return v;
}

std::vector<TheoremInstance> theorem_suite() {
    std::vector<TheoremInstance> out;
    auto add = [&](std::string thm, std::string inst, bool ok, std::string detail) {
        out.push_back(TheoremInstance{std::move(thm), std::move(inst), ok, std::move(detail)});
    };

    const AnalyticMap z_over_2mz = AnalyticMap::mobius(1.0, 0.0, -1.0, 2.0);   // z/(2-z)
    const AnalyticMap half_shift = AnalyticMap::mobius(1.0, 1.0, 0.0, 2.0);    // (z+1)/2
    const AnalyticMap cayley_like = AnalyticMap::mobius(0.0, 1.0, -1.0, 2.0);  // 1/(2-z)
    const AnalyticMap exp_z = AnalyticMap::exp_of(AnalyticMap::identity());

    {  // fixed origin: compression norm pinned at 1 for every N
        bool ok = true;
        std::string detail;
        for (int n : {16, 32, 64, 128}) {
            const double nm = operator_norm_estimate(compose_matrix(z_over_2mz, n).matrix).value;
            if (std::abs(nm - 1.0) > 1e-9) ok = false;
            detail += "N=" + std::to_string(n) + ":" + std::to_string(nm) + " ";
        }
        add("norm-one iff phi(0)=0", "phi = z/(2-z)", ok, detail);
    }
    {  // phi(0) != 0 with interior fixed point: norm strictly above 1
        const AnalyticMap phi = AnalyticMap::mobius(2.0, 1.0, 0.0, 4.0);  // (2z+1)/4
        const double nm = operator_norm_estimate(compose_matrix(phi, 128).matrix).value;
        const auto bounds = cphi_norm_bounds(phi);
        add("norm-one iff phi(0)=0", "phi = (2z+1)/4", nm >= 1.02 && nm <= bounds.second + 1e-9,
            "norm=" + std::to_string(nm) + " lower_bound=" + std::to_string(bounds.first));
    }
    {  // canonical weight conjugates to a constant and gives ||W|| = |c|
        const cplx a(0.5);
        auto [zeta, tau] = conjugation_pair(a);
        const AnalyticMap phi = compose(tau, compose(AnalyticMap::mobius(0.5, 0.0, 0.0, 1.0), tau));
        const AnalyticMap psi = canonical_weight(phi, a, cplx(1.0));
        auto [f, g] = conjugated_symbols(psi, phi, a);
        bool ok = std::abs(g.eval(cplx(0.0))) <= 1e-10;
        double dev = 0.0;
        for (const cplx& z : quasi_random_disk_points(100))
            dev = std::max(dev, std::abs(f.eval(z) - cplx(1.0)));
        ok = ok && dev <= 1e-8;
        const double nm = operator_norm_estimate(wco_matrix(psi, phi, 128).matrix).value;
        ok = ok && nm >= 0.98 && nm <= 1.0 + 1e-9;
        add("canonical weight attains |psi(a)| = ||W||", "a = 1/2, c = 1", ok,
            "f-deviation=" + std::to_string(dev) + " norm=" + std::to_string(nm));
    }
    {  // eigenvalue list matches the triangular diagonal
        const AnalyticMap phi = AnalyticMap::mobius(1.0, 0.0, 0.0, 2.0);  // z/2
        const DenjoyWolffData dw = denjoy_wolff(phi);
        const auto eigs = eigenvalue_list_theory(exp_z, phi, dw, 7);
        const OperatorTruncation w = wco_matrix(exp_z, phi, 8);
        bool ok = true;
        for (int k = 0; k < 8; ++k)
            if (std::abs(w.matrix(k, k) - eigs[k + 1]) > 1e-12) ok = false;
        add("eigenvalue list {0, psi(a) phi'(a)^k}", "psi = exp(z), phi = z/2", ok,
            "diagonal match at 1e-12");
    }
    {  // essential-radius product formula on the z/(2-z) family
        const EssentialRadius ess = cphi_essential_spectral_radius(z_over_2mz);
        const DenjoyWolffData dw = denjoy_wolff(z_over_2mz);
        const AnalyticMap psi =
            AnalyticMap::constant(2.0) * exp_z / AnalyticMap::polynomial({2.0, -1.0});
        const TheoryRadius rho = wco_spectral_radius_theory(psi, z_over_2mz, dw,
                                                            {"univalent", "non_inner"});
        const double expected = std::sqrt(2.0) * std::exp(1.0);
        add("rho(W) = max{|psi(a)|, |psi(b)| rho_e(C_phi)}", "psi = 2 e^z/(2-z), phi = z/(2-z)",
            std::abs(ess.value - 1.0 / std::sqrt(2.0)) <= 1e-12 &&
                std::abs(rho.value - expected) <= 1e-12 * expected,
            "rho=" + std::to_string(rho.value));
    }
    {  // ||psi||_2 <= |psi(a)| necessary condition
        const Psi2Result consts = psi2_check(AnalyticMap::constant(cplx(0.7, 0.2)), cplx(0.0));
        const AnalyticMap exp_neg = AnalyticMap::exp_of(-AnalyticMap::identity());
        const Psi2Result failing = psi2_check(exp_neg, cplx(0.0));
        add("||psi||_2 lower bound for |psi(a)|", "constant passes, exp(-z) at 0 fails",
            consts.verdict == Psi2::passes && failing.verdict == Psi2::fails,
            "||exp(-z)||_2=" + std::to_string(failing.psi_h2));
    }
    {  // normaloid transfer with ||psi||_inf attained at the boundary point
        const DenjoyWolffData dw = denjoy_wolff(half_shift);
        const TheoryRadius rho = wco_spectral_radius_theory(exp_z, half_shift, dw);
        const double expected = std::exp(1.0) * std::sqrt(2.0);
        const double nm = operator_norm_estimate(wco_matrix(exp_z, half_shift, 256).matrix).value;
        const double upper = sup_norm_estimate(exp_z) *
                             operator_norm_estimate(compose_matrix(half_shift, 256).matrix).value;
        add("normaloid transfer W = T_psi C_phi", "psi = exp(z), phi = (z+1)/2",
            std::abs(rho.value - expected) <= 1e-9 && nm <= upper + 1e-9 && nm <= expected + 1e-6,
            "rho=" + std::to_string(rho.value) + " norm256=" + std::to_string(nm));
    }
    {  // parabolic boundary point: C_phi is never normaloid
        const double nm = operator_norm_estimate(compose_matrix(cayley_like, 256).matrix).value;
        add("multiplier 1 forbids normaloid C_phi", "phi = 1/(2-z)", nm >= 1.01,
            "norm256=" + std::to_string(nm) + " rho=1");
    }
    {  // factored weight: rho(W_{f psi, phi}) = |f(a)| |psi(a)|
        const AnalyticMap psi = cayley_like;
        const AnalyticMap fpsi = exp_z * psi;
        const DenjoyWolffData dw = denjoy_wolff(psi);
        const TheoryRadius rho = wco_spectral_radius_theory(fpsi, psi, dw, {"uci"});
        add("factored normaloid weight", "f = exp(z), psi = phi = 1/(2-z)",
            std::abs(rho.value - std::exp(1.0)) <= 1e-9, "rho=" + std::to_string(rho.value));
    }
    {  // convexoid <-> spectraloid flag under certified UCI with multiplier < 1
        ClassifyOptions opt;
        opt.ladder = {32, 64, 128};
        const ClassificationVerdict cv = classify(exp_z, half_shift, opt);
        const NumericalRange r = numerical_range(wco_matrix(exp_z, half_shift, 128).matrix, 64);
        const double nm = operator_norm_estimate(wco_matrix(exp_z, half_shift, 128).matrix).value;
        add("convexoid iff spectraloid under UCI", "psi = exp(z), phi = (z+1)/2",
            cv.convexoid_equiv_spectraloid && r.radius <= nm + 1e-9,
            "numerical radius=" + std::to_string(r.radius));
    }
    return out;
}

}  // namespace wco
