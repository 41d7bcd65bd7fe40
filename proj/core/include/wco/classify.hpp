#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "wco/spectra.hpp"

namespace wco {

enum class Verdict { yes, no, inconclusive };
enum class WeightForm { matches, differs, na };
enum class Psi2 { passes, fails, na };

std::string to_string(Verdict v);

struct EvidenceItem {
    std::string claim;
    double theory = 0.0;
    double observed = 0.0;
    std::vector<int> ladder;
    double tolerance = 0.0;
    std::string note;
};

struct ClassificationVerdict {
    Verdict normaloid = Verdict::inconclusive;
    Verdict spectraloid = Verdict::inconclusive;
    Verdict essentially_normaloid = Verdict::inconclusive;
    bool convexoid_equiv_spectraloid = false;
    WeightForm weight_form = WeightForm::na;
    Psi2 psi2_necessary = Psi2::na;
    std::vector<EvidenceItem> evidence;
    std::vector<std::string> hypotheses_unmet;
};

struct ClassifyOptions {
    std::vector<int> ladder = {32, 64, 128, 256, 512};
    int angles = 64;
    double tol_rel = 0.02;          // relative tolerance for yes-verdicts at N_max
    double stabilization = 0.005;   // max relative change between the last two N
    std::set<std::string> assertions;  // univalent | non_inner | uci
    std::uint64_t seed = 12345;
};

// Compares psi against psi(a) K_a / (K_a ∘ phi) at 200 quasi-random disk points.
WeightForm weight_form_test(const AnalyticMap& psi, const AnalyticMap& phi, cplx a);

struct Psi2Result {
    Psi2 verdict = Psi2::na;
    double psi_h2 = 0.0;     // ||psi||_2 including the tail estimate
    double psi_at_a = 0.0;   // |psi(a)|
};

// ||psi||_2 <= |psi(a)| necessary condition for the rho(W) = |psi(a)| case.
Psi2Result psi2_check(const AnalyticMap& psi, cplx a);

ClassificationVerdict classify(const AnalyticMap& psi, const AnalyticMap& phi,
                               const ClassifyOptions& options = {});

struct TheoremInstance {
    std::string theorem;
    std::string instance;
    bool passed = false;
    std::string detail;
};

// Parameterized executable checks of the theory results used above.
std::vector<TheoremInstance> theorem_suite();

}  // namespace wco
