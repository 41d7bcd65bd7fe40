#include "wco/spectra.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "wco/errors.hpp"

namespace wco {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXcd random_unit_vector(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(n);
    for (int k = 0; k < n; ++k) v(k) = cplx(gauss(rng), gauss(rng));
    v.normalize();
    return v;
}

}  // namespace

NormEstimate operator_norm_estimate(const Eigen::MatrixXcd& a, std::uint64_t seed) {
    const int n = static_cast<int>(a.rows());
    if (n == 0) return NormEstimate{0.0, true, 0};
    std::mt19937_64 rng(seed);
    const int max_iter = 100000;
    const int restart_budget = 5;
    double best = 0.0;
    int total_iter = 0;
    for (int attempt = 0; attempt < restart_budget; ++attempt) {
        Eigen::VectorXcd v = random_unit_vector(n, rng);
        double sigma_prev = -1.0;
        int stable = 0;
        for (int it = 0; it < max_iter / restart_budget; ++it) {
            ++total_iter;
            Eigen::VectorXcd w = a * v;
            const double sigma = w.norm();
            v = a.adjoint() * w;
            const double nv = v.norm();
            if (nv == 0.0) return NormEstimate{0.0, true, total_iter};  // reached ker(A^*A)
            v /= nv;
            if (sigma_prev >= 0.0 && std::abs(sigma - sigma_prev) <= 1e-10 * std::max(1.0, sigma)) {
                if (++stable >= 3) return NormEstimate{sigma, true, total_iter};
            } else {
                stable = 0;
            }
            sigma_prev = sigma;
            best = std::max(best, sigma);
        }
    }
    return NormEstimate{best, false, total_iter};
}

double spectral_radius_matrix(const Eigen::MatrixXcd& a) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, false);
    if (solver.info() != Eigen::Success)
        throw NoConvergence("spectral_radius_matrix: eigen solver failed");
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

std::vector<std::pair<int, double>> gelfand_sequence(const Eigen::MatrixXcd& a, int k_max,
                                                     std::uint64_t seed) {
    if (k_max > 64) throw PreconditionViolation("gelfand_sequence: k_max must be <= 64");
    std::vector<std::pair<int, double>> out;
    Eigen::MatrixXcd p = a;
    double log_scale = 0.0;  // powers tracked as p * exp(log_scale) against overflow
    for (int k = 1; k <= k_max; ++k) {
        const NormEstimate est = operator_norm_estimate(p, seed);
        out.emplace_back(k, std::exp((std::log(est.value) + log_scale) / k));
        if (k == k_max) break;
        const double m = p.cwiseAbs().maxCoeff();
        if (m > 0.0) {
            p /= m;
            log_scale += std::log(m);
        }
        p = p * a;
    }
    return out;
}

NumericalRange numerical_range(const Eigen::MatrixXcd& a, int angles) {
    if (angles < 16) throw PreconditionViolation("numerical_range: need at least 16 angles");
    NumericalRange result;
    result.boundary.reserve(angles);
    for (int k = 0; k < angles; ++k) {
        const double theta = 2.0 * kPi * k / angles;
        const cplx rot = std::polar(1.0, theta);
        const Eigen::MatrixXcd b = rot * a;
        const Eigen::MatrixXcd h = 0.5 * (b + b.adjoint());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
        if (solver.info() != Eigen::Success)
            throw NoConvergence("numerical_range: Hermitian eigen solve failed");
        const int n = static_cast<int>(a.rows());
        const Eigen::VectorXcd v = solver.eigenvectors().col(n - 1);
        const cplx point = (v.adjoint() * (a * v))(0, 0);
        result.boundary.push_back(point);
        result.radius = std::max(result.radius, std::abs(point));
    }
    return result;
}

std::pair<double, double> cphi_norm_bounds(const AnalyticMap& phi) {
    const double p = std::abs(phi.eval(cplx(0.0)));
    return {std::sqrt(1.0 / (1.0 - p * p)), std::sqrt((1.0 + p) / (1.0 - p))};
}

double cphi_spectral_radius_theory(const DenjoyWolffData& dw) {
    if (dw.location == DwLocation::interior) return 1.0;
    return 1.0 / std::sqrt(dw.multiplier);
}

namespace {

// Local maxima of |phi(e^{i theta})| at height ~1, refined by golden-section.
std::vector<cplx> unimodular_sup_points(const AnalyticMap& phi, int samples = 8192) {
    std::vector<double> vals(samples);
    for (int k = 0; k < samples; ++k)
        vals[k] = std::abs(phi.eval(std::polar(1.0, 2.0 * kPi * k / samples)));
    std::vector<cplx> points;
    auto value_at = [&](double th) { return std::abs(phi.eval(std::polar(1.0, th))); };
    for (int k = 0; k < samples; ++k) {
        const double prev = vals[(k + samples - 1) % samples];
        const double next = vals[(k + 1) % samples];
        if (vals[k] < prev || vals[k] < next) continue;
        if (vals[k] < 1.0 - 1e-4) continue;
        // golden-section refinement on [theta-dtheta, theta+dtheta]
        const double dth = 2.0 * kPi / samples;
        double lo = 2.0 * kPi * k / samples - dth;
        double hi = lo + 2.0 * dth;
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
        double fc = value_at(c), fd = value_at(d);
        for (int it = 0; it < 80 && hi - lo > 1e-14; ++it) {
            if (fc > fd) {
                hi = d;
                d = c;
                fd = fc;
                c = hi - gr * (hi - lo);
                fc = value_at(c);
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + gr * (hi - lo);
                fd = value_at(d);
            }
        }
        const double th = 0.5 * (lo + hi);
        if (value_at(th) >= 1.0 - 1e-9) {
            const cplx w = std::polar(1.0, th);
            bool dup = false;
            for (const auto& p : points)
                if (std::abs(p - w) < 1e-6) dup = true;
            if (!dup) points.push_back(w);
        }
    }
    return points;
}

}  // namespace

EssentialRadius cphi_essential_spectral_radius(const AnalyticMap& phi, int n_max) {
    if (phi.is_transcendental())
        throw UnsupportedRepresentation(
            "cphi_essential_spectral_radius: rational representation required");
    const DenjoyWolffData dw = denjoy_wolff(phi);
    if (dw.location != DwLocation::interior)
        throw HypothesisUnmet(
            "cphi_essential_spectral_radius: interior Denjoy-Wolff point required");

    for (int n = 1; n <= n_max; ++n) {
        const AnalyticMap phin = phi.iterate(static_cast<unsigned>(n));
        const std::vector<cplx> sn = unimodular_sup_points(phin);
        if (sn.empty()) return EssentialRadius{0.0, cplx(0.0), n, true};

        // exact unimodular fixed points of phi_n, for matching and multipliers
        std::vector<BoundaryFixedPoint> fixed;
        for (const auto& fp : boundary_fixed_points(phi, n))
            if (fp.n == n) fixed.push_back(fp);

        bool all_fixed = true;
        double best = 0.0;
        cplx best_point(0.0);
        for (const cplx& w : sn) {
            const BoundaryFixedPoint* match = nullptr;
            for (const auto& fp : fixed)
                if (std::abs(fp.point - w) < 1e-6) match = &fp;
            if (!match) {
                all_fixed = false;
                break;
            }
            const double v = std::pow(std::abs(match->multiplier), -1.0 / (2.0 * n));
            if (v > best) {
                best = v;
                best_point = match->point;
            }
        }
        if (all_fixed) return EssentialRadius{best, best_point, n, false};
    }
    throw NoConvergence("cphi_essential_spectral_radius: S_n did not resolve within n_max");
}

TheoryRadius wco_spectral_radius_theory(const AnalyticMap& psi, const AnalyticMap& phi,
                                        const DenjoyWolffData& dw,
                                        const std::set<std::string>& assertions) {
    TheoryRadius out;
    if (dw.location == DwLocation::interior) {
        const double psi_a = std::abs(psi.eval(dw.point));
        const EssentialRadius ess = cphi_essential_spectral_radius(phi);
        if (ess.power_compact) {
            out.value = psi_a;
            out.branch = "interior-power-compact";
            return out;
        }
        if (!assertions.count("univalent"))
            out.warnings.push_back("univalence of phi on D is caller-asserted");
        if (!assertions.count("non_inner"))
            out.warnings.push_back("phi not being inner is caller-asserted");
        const cplx psi_b = value_at_boundary(psi, ess.establishing_point);
        const double sup = sup_norm_estimate(psi);
        if (std::abs(psi_b) < sup * (1.0 - 1e-6))
            out.warnings.push_back("|psi(b)| = ||psi||_inf not satisfied by boundary sampling");
        out.essential_term = std::abs(psi_b) * ess.value;
        out.value = std::max(psi_a, out.essential_term);
        out.branch = "interior-essential";
        return out;
    }

    // boundary branch: rho(W) = |psi(a)| rho(C_phi), valid under UCI
    const UciCertificate uci = uci_sufficient(phi, dw);
    if (!uci.certified && !assertions.count("uci"))
        throw HypothesisUnmet(
            "wco_spectral_radius_theory: UCI neither certified nor caller-asserted");
    if (!uci.certified) out.warnings.push_back("UCI caller-asserted");
    const cplx psi_a = value_at_boundary(psi, dw.point);
    if (std::abs(psi_a) == 0.0)
        throw HypothesisUnmet("wco_spectral_radius_theory: psi(a) = 0 on the boundary branch");
    out.value = std::abs(psi_a) / std::sqrt(dw.multiplier);
    out.branch = "boundary-uci";
    return out;
}

std::vector<cplx> eigenvalue_list_theory(const AnalyticMap& psi, const AnalyticMap& phi,
                                         const DenjoyWolffData& dw, int m) {
    if (dw.location != DwLocation::interior)
        throw HypothesisUnmet("eigenvalue_list_theory: interior Denjoy-Wolff point required");
    std::vector<cplx> out;
    out.push_back(cplx(0.0));
    const cplx psi_a = psi.eval(dw.point);
    const cplx mult = phi.derivative(dw.point);
    cplx p(1.0);
    for (int k = 0; k <= m; ++k) {
        out.push_back(psi_a * p);
        p *= mult;
    }
    return out;
}

EssentialLowerBound essential_norm_lower(const AnalyticMap& psi, const AnalyticMap& phi, cplx b,
                                         const std::vector<double>& radii) {
    std::vector<double> rs = radii;
    if (rs.empty())
        for (int k = 4; k <= 20; ++k) rs.push_back(1.0 - std::pow(2.0, -k));
    b /= std::abs(b);
    EssentialLowerBound out;
    for (double r : rs) {
        const cplx w = r * b;
        const cplx pw = phi.eval(w);
        // ||C_phi^* k_w|| = sqrt((1-|w|^2)/(1-|phi(w)|^2)), kernels being eigen-like under adjoints
        const double ratio = std::sqrt((1.0 - std::norm(w)) / (1.0 - std::norm(pw)));
        const double bound = std::abs(psi.eval(w)) * ratio;
        out.samples.emplace_back(r, bound);
        out.value = std::max(out.value, bound);
    }
    return out;
}

}  // namespace wco
