#include "wco/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "wco/classify.hpp"
#include "wco/errors.hpp"
#include "wco/expr.hpp"

namespace wco {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

class Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

// sqrt(sum 1/(k!)^2), the H^2 norm of exp(-z), summed directly
double exp_weight_h2_oracle() {
    double sum = 0.0, term = 1.0;
    for (int k = 0; sum + term != sum; ++k) {
        sum += term;
        term /= double(k + 1) * double(k + 1);
    }
    return std::sqrt(sum);
}

CriterionResult criterion_1() {
    Timer t;
    CriterionResult r{1, "spectral radius of 2e^z/(2-z) with z/(2-z)"};
    const AnalyticMap psi = parse_symbol("2*exp(z)/(2-z)");
    const AnalyticMap phi = parse_symbol("z/(2-z)");
    const TheoryRadius rho = wco_spectral_radius_theory(psi, phi, denjoy_wolff(phi));
    const double expected = std::sqrt(2.0) * std::exp(1.0);
    r.expected = fmt(expected);
    r.observed = fmt(rho.value);
    r.tolerance = "1e-12";
    r.passed = std::abs(rho.value - expected) <= 1e-12;
    r.seconds = t.seconds();
    return r;
}

CriterionResult criterion_2() {
    Timer t;
    CriterionResult r{2, "e^{-z} with z/(2-z): rho 1, not normaloid, essentially normaloid"};
    const AnalyticMap psi = parse_symbol("exp(-z)");
    const AnalyticMap phi = parse_symbol("z/(2-z)");
    const TheoryRadius rho = wco_spectral_radius_theory(psi, phi, denjoy_wolff(phi));
    const double ess_expected = std::sqrt(2.0) / (2.0 * std::exp(1.0));
    ClassifyOptions opt;
    opt.ladder = {32, 64, 128, 256};
    const ClassificationVerdict v = classify(psi, phi, opt);
    const Psi2Result p2 = psi2_check(psi, cplx(0.0));
    const double oracle = exp_weight_h2_oracle();
    r.expected = "rho=1 ess=" + fmt(ess_expected) + " ||psi||_2=" + fmt(oracle) +
                 " normaloid=no ess_normaloid=yes";
    r.observed = "rho=" + fmt(rho.value) + " ess=" + fmt(rho.essential_term) +
                 " ||psi||_2=" + fmt(p2.psi_h2) + " normaloid=" + to_string(v.normaloid) +
                 " ess_normaloid=" + to_string(v.essentially_normaloid);
    r.tolerance = "1e-9 (values), 1e-6 (norm oracle)";
    r.passed = std::abs(rho.value - 1.0) <= 1e-9 &&
               std::abs(rho.essential_term - ess_expected) <= 1e-9 &&
               std::abs(p2.psi_h2 - oracle) <= 1e-6 && v.normaloid == Verdict::no &&
               v.essentially_normaloid == Verdict::yes;
    r.seconds = t.seconds();
    return r;
}

CriterionResult criterion_3() {
    Timer t;
    CriterionResult r{3, "composition norms: pinned at 1 iff phi(0)=0"};
    const AnalyticMap fixed = parse_symbol("z/(2-z)");
    const AnalyticMap shifted = parse_symbol("(z+1)/2");
    bool ok = true;
    double worst = 0.0;
    for (int n : {32, 64, 128, 256, 512}) {
        const double nm = operator_norm_estimate(compose_matrix(fixed, n).matrix).value;
        worst = std::max(worst, std::abs(nm - 1.0));
        ok = ok && std::abs(nm - 1.0) <= 1e-9;
    }
    const double nm512 = operator_norm_estimate(compose_matrix(shifted, 512).matrix).value;
    ok = ok && nm512 >= 1.1547 - 0.02 && nm512 <= 1.7321 + 1e-9 && nm512 > 1.10;
    r.expected = "|norm-1| <= 1e-9 on ladder; N=512 norm in [1.1347, 1.7321]";
    r.observed = "max |norm-1| = " + fmt(worst) + "; N=512 norm = " + fmt(nm512);
    r.tolerance = "1e-9 / interval";
    r.passed = ok;
    r.seconds = t.seconds();
    return r;
}

CriterionResult criterion_4() {
    Timer t;
    CriterionResult r{4, "canonical weights attain |c| for random Mobius maps"};
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    bool ok = true;
    double worst_dev = 0.0, worst_norm = 0.0;
    for (int trial = 0; trial < 20 && ok; ++trial) {
        const cplx a = 0.8 * unit(rng) * std::polar(1.0, 2.0 * M_PI * unit(rng));
        const cplx s = 0.9 * unit(rng) * std::polar(1.0, 2.0 * M_PI * unit(rng));
        const cplx c = (0.5 + 1.5 * unit(rng)) * std::polar(1.0, 2.0 * M_PI * unit(rng));
        auto [zeta, tau] = conjugation_pair(a);
        const AnalyticMap phi =
            compose(tau, compose(AnalyticMap::mobius(s, 0.0, 0.0, 1.0), tau));
        const AnalyticMap psi = canonical_weight(phi, a, c);
        auto [f, g] = conjugated_symbols(psi, phi, a);
        for (int k = 0; k < 100; ++k) {
            const cplx z = 0.95 * std::sqrt((k + 0.5) / 100.0) *
                           std::polar(1.0, 2.0 * M_PI * std::fmod(k * 0.6180339887498949, 1.0));
            worst_dev = std::max(worst_dev, std::abs(f.eval(z) - c));
        }
        ok = ok && worst_dev <= 1e-8;
        const double nm = operator_norm_estimate(wco_matrix(psi, phi, 256).matrix).value;
        worst_norm = std::max(worst_norm, std::abs(nm - std::abs(c)));
        ok = ok && nm >= std::abs(c) - 0.01 && nm <= std::abs(c) + 1e-9;
    }
    r.expected = "f constant to 1e-8; norm in [|c|-0.01, |c|+1e-9], 20 trials";
    r.observed = "max f deviation " + fmt(worst_dev) + "; max norm deficit " + fmt(worst_norm);
    r.tolerance = "1e-8 / 0.01";
    r.passed = ok;
    r.seconds = t.seconds();
    return r;
}

CriterionResult criterion_5() {
    Timer t;
    CriterionResult r{5, "triangular diagonal (1, 1/2, 1/4, ...) and matrix spectral radius 1"};
    const AnalyticMap psi = parse_symbol("exp(z)");
    const AnalyticMap phi = parse_symbol("z/2");
    const OperatorTruncation w = wco_matrix(psi, phi, 32);
    bool ok = true;
    for (int k = 0; k < 32; ++k)
        ok = ok && w.matrix(k, k) == cplx(std::pow(0.5, k));  // exact dyadic values
    const double rho = spectral_radius_matrix(w.matrix);
    ok = ok && std::abs(rho - 1.0) <= 1e-10;
    r.expected = "diagonal 2^{-k} exactly; rho = 1";
    r.observed = "diagonal " + std::string(ok ? "exact" : "mismatch") + "; rho = " + fmt(rho);
    r.tolerance = "exact / 1e-10";
    r.passed = ok;
    r.seconds = t.seconds();
    return r;
}

CriterionResult criterion_6() {
    Timer t;
    CriterionResult r{6, "essential spectral radius formula and kernel lower bound"};
    const AnalyticMap phi = parse_symbol("z/(2-z)");
    const AnalyticMap phi2 = parse_symbol("z/(4-3*z)");
    const EssentialRadius e1 = cphi_essential_spectral_radius(phi);
    const EssentialRadius e2 = cphi_essential_spectral_radius(phi2);
    const EssentialLowerBound lb = essential_norm_lower(AnalyticMap::constant(1.0), phi, cplx(1.0));
    bool monotone = true;
    for (std::size_t k = 1; k < lb.samples.size(); ++k)
        monotone = monotone && lb.samples[k].second <= lb.samples[k - 1].second + 1e-9;
    const double last = lb.samples.back().second;
    const bool ok = std::abs(e1.value - 1.0 / std::sqrt(2.0)) <= 1e-12 &&
                    std::abs(e2.value - e1.value * e1.value) <= 1e-10 && last >= 0.70 && monotone;
    r.expected = "2^{-1/2}; square law; kernel bound >= 0.70, monotone";
    r.observed = fmt(e1.value) + "; " + fmt(e2.value) + "; last bound " + fmt(last) +
                 (monotone ? " (monotone)" : " (not monotone)");
    r.tolerance = "1e-12 / 1e-10 / 0.70";
    r.passed = ok;
    r.seconds = t.seconds();
    return r;
}

CriterionResult criterion_7() {
    Timer t;
    CriterionResult r{7, "self-adjoint pair 1/(2-z) and the factored-weight radius e"};
    const AnalyticMap psi = parse_symbol("1/(2-z)");
    const OperatorTruncation w = wco_matrix(psi, psi, 256);
    const double herm = (w.matrix - w.matrix.adjoint()).norm();
    const NumericalRange range = numerical_range(w.matrix, 64);
    double max_im = 0.0;
    for (const cplx& z : range.boundary) max_im = std::max(max_im, std::abs(z.imag()));
    const AnalyticMap fpsi = parse_symbol("exp(z)/(2-z)");
    const TheoryRadius rho = wco_spectral_radius_theory(fpsi, psi, denjoy_wolff(psi), {"uci"});
    const bool ok = herm <= 1e-10 && max_im <= 1e-8 &&
                    std::abs(rho.value - std::exp(1.0)) <= 1e-9;
    r.expected = "Hermitian residual <= 1e-10; collinear range; rho = e";
    r.observed = "residual " + fmt(herm) + "; max |Im| " + fmt(max_im) + "; rho " + fmt(rho.value);
    r.tolerance = "1e-10 / 1e-8 / 1e-9";
    r.passed = ok;
    r.seconds = t.seconds();
    return r;
}

CriterionResult criterion_8() {
    Timer t;
    CriterionResult r{8, "property suite: norm chains, Gelfand, monotonicity, involutions"};
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss(0.0, 1.0);
    bool ok = true;
    std::string failure;

    for (int trial = 0; trial < 100 && ok; ++trial) {
        const int n = 4 + int(rng() % 29);
        Eigen::MatrixXcd a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = cplx(gauss(rng), gauss(rng));
        const double rho = spectral_radius_matrix(a);
        const double nr = numerical_range(a, 32).radius;
        const double nm = operator_norm_estimate(a).value;
        if (!(rho <= nr + 1e-9 && nr <= nm + 1e-9)) {
            ok = false;
            failure = "norm chain violated";
        }
    }
    for (int trial = 0; trial < 10 && ok; ++trial) {
        Eigen::MatrixXcd a(8, 8);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) a(i, j) = cplx(gauss(rng), gauss(rng));
        const auto g = gelfand_sequence(a, 12);
        for (std::size_t k = 1; k + 1 < g.size(); ++k) {
            // ||A^{j+k}|| <= ||A^j|| ||A^k|| in root form
            const double lhs = std::pow(g[k + 1].second, k + 2);
            const double rhs = std::pow(g[k].second, k + 1) * g[0].second;
            if (lhs > rhs * (1.0 + 1e-8)) {
                ok = false;
                failure = "Gelfand submultiplicativity violated";
            }
        }
    }
    if (ok) {
        const AnalyticMap psi = parse_symbol("exp(z)");
        const AnalyticMap phi = parse_symbol("(z+1)/2");
        double prev = 0.0;
        for (int n : {16, 32, 64, 128}) {
            const double nm = operator_norm_estimate(wco_matrix(psi, phi, n).matrix).value;
            if (nm < prev - 1e-9) {
                ok = false;
                failure = "compression norms not monotone";
            }
            prev = nm;
        }
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20 && ok; ++trial) {
        const cplx a = 0.9 * unit(rng) * std::polar(1.0, 2.0 * M_PI * unit(rng));
        auto [zeta, tau] = conjugation_pair(a);
        const AnalyticMap twice = compose(tau, tau);
        const AnalyticMap phi =
            compose(tau, compose(AnalyticMap::mobius(0.5 * unit(rng), 0.0, 0.0, 1.0), tau));
        const AnalyticMap w_kernel = canonical_weight(phi, a, cplx(1.0));
        const cplx abar = std::conj(a);
        for (int k = 0; k < 25 && ok; ++k) {
            const cplx z = 0.9 * std::sqrt((k + 0.5) / 25.0) *
                           std::polar(1.0, 2.0 * M_PI * std::fmod(k * 0.6180339887498949, 1.0));
            if (std::abs(twice.eval(z) - z) > 1e-10) {
                ok = false;
                failure = "tau involution violated";
            }
            // kernel-quotient form vs the cleared rational form
            const cplx direct = (1.0 - abar * phi.eval(z)) / (1.0 - abar * z);
            if (std::abs(w_kernel.eval(z) - direct) > 1e-10) {
                ok = false;
                failure = "weight identity violated";
            }
        }
    }
    if (ok) {
        const Psi2Result pass_case = psi2_check(AnalyticMap::constant(cplx(2.0, -1.0)), cplx(0.3));
        const Psi2Result fail_case = psi2_check(parse_symbol("exp(-z)"), cplx(0.0));
        if (pass_case.verdict != Psi2::passes || fail_case.verdict != Psi2::fails) {
            ok = false;
            failure = "psi2 necessary-condition cases wrong";
        }
    }
    r.expected = "all property groups green";
    r.observed = ok ? "all green" : failure;
    r.tolerance = "1e-8 .. 1e-10 per group";
    r.passed = ok;
    r.seconds = t.seconds();
    return r;
}

}  // namespace

std::vector<CriterionResult> verify_suite() {
    return {criterion_1(), criterion_2(), criterion_3(), criterion_4(),
            criterion_5(), criterion_6(), criterion_7(), criterion_8()};
}

}  // namespace wco
