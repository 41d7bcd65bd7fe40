#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wco/operators.hpp"
#include "wco/symbols.hpp"

namespace wco {

struct NormEstimate {
    double value = 0.0;   // best lower bound; the largest singular value when converged
    bool converged = false;
    int iterations = 0;
};

// Largest singular value by power iteration on A^* A (relative tolerance
// 1e-10, random restarts on stagnation).
NormEstimate operator_norm_estimate(const Eigen::MatrixXcd& a, std::uint64_t seed = 12345);

double spectral_radius_matrix(const Eigen::MatrixXcd& a);

// (k, ||A^k||^{1/k}) for k = 1..k_max (k_max <= 64).
std::vector<std::pair<int, double>> gelfand_sequence(const Eigen::MatrixXcd& a, int k_max,
                                                     std::uint64_t seed = 12345);

struct NumericalRange {
    std::vector<cplx> boundary;  // supporting-line points, one per angle
    double radius = 0.0;
};

// Field of values by the rotated-Hermitian-part supporting-line method.
NumericalRange numerical_range(const Eigen::MatrixXcd& a, int angles = 64);

// Cowen-MacCluer sandwich ((1/(1-|phi(0)|^2))^{1/2}, ((1+|phi(0)|)/(1-|phi(0)|))^{1/2}).
std::pair<double, double> cphi_norm_bounds(const AnalyticMap& phi);

// 1 at an interior Denjoy-Wolff point, multiplier^{-1/2} on the boundary.
double cphi_spectral_radius_theory(const DenjoyWolffData& dw);

struct EssentialRadius {
    double value = 0.0;
    cplx establishing_point{};  // b in S_n attaining the max
    int n = 0;                  // iterate at which S_n resolved
    bool power_compact = false;
};

// max{|phi_n'(w)|^{-1/2n} : w in S_n} once S_n is empty or all-fixed;
// 0 on the power-compact branch. Interior Denjoy-Wolff point required.
EssentialRadius cphi_essential_spectral_radius(const AnalyticMap& phi, int n_max = 8);

struct TheoryRadius {
    double value = 0.0;
    double essential_term = 0.0;      // |psi(b)| rho_e(C_phi) (interior branch)
    std::string branch;               // interior-power-compact | interior-essential | boundary-uci
    std::vector<std::string> warnings;  // hypotheses that could not be verified
};

// rho(W) by the closed-form theory paths. `assertions` may contain
// "univalent", "non_inner", "uci" for hypotheses the caller vouches for.
TheoryRadius wco_spectral_radius_theory(const AnalyticMap& psi, const AnalyticMap& phi,
                                        const DenjoyWolffData& dw,
                                        const std::set<std::string>& assertions = {});

// {0, psi(a), psi(a) phi'(a), ..., psi(a) phi'(a)^m} for interior a.
std::vector<cplx> eigenvalue_list_theory(const AnalyticMap& psi, const AnalyticMap& phi,
                                         const DenjoyWolffData& dw, int m);

struct EssentialLowerBound {
    double value = 0.0;  // max over the sampled radii
    std::vector<std::pair<double, double>> samples;  // (r, |psi(rb)| ||C* k_{rb}||)
};

// Kernel-sequence lower bound for ||W||_e along w = r b.
EssentialLowerBound essential_norm_lower(const AnalyticMap& psi, const AnalyticMap& phi, cplx b,
                                         const std::vector<double>& radii = {});

}  // namespace wco
