#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wco/analytic_map.hpp"

namespace wco {

enum class SelfMapStatus { verified, refuted, unknown };

enum class DwLocation { interior, boundary };
enum class DwMethod { closed_form, orbit_iteration };

struct DenjoyWolffData {
    cplx point{};
    double multiplier = 0.0;  // |phi'(a)| interior; Julia-Caratheodory derivative on the boundary
    DwLocation location = DwLocation::interior;
    DwMethod method = DwMethod::closed_form;
    double residual = 0.0;
};

struct KernelFunction {
    cplx anchor;
    cplx operator()(cplx z) const { return 1.0 / (1.0 - std::conj(anchor) * z); }
};

struct BoundaryFixedPoint {
    int n = 1;           // iterate index
    cplx point{};        // unimodular fixed point of phi_n
    cplx multiplier{};   // phi_n'(point)
};

struct UciCertificate {
    bool certified = false;
    int n = 0;  // least N with phi_N(closed disk) inside D ∪ {a}
};

// Circle image of the unit circle under a Mobius map (self-maps only).
struct Circle {
    cplx center;
    double radius;
};
Circle mobius_unit_circle_image(const Mobius& m);

SelfMapStatus self_map_check(const AnalyticMap& map, int grid_size = 256);

// Closed-form fixed-point analysis for Mobius maps; orbit iteration with a
// Julia-Caratheodory multiplier fit otherwise. Throws NoConvergence on
// elliptic automorphisms and stalls.
DenjoyWolffData denjoy_wolff(const AnalyticMap& map);

// Orbit-iteration path regardless of representation (cross-check route).
DenjoyWolffData denjoy_wolff_orbit(const AnalyticMap& map);

// Unimodular fixed points of phi_n for n = 1..n_max with multipliers.
// Rational maps only (root-finding on num_n - z*den_n).
std::vector<BoundaryFixedPoint> boundary_fixed_points(const AnalyticMap& map, int n_max);

// Sufficient test phi_N(closed disk) ⊆ D ∪ {a}; meaningful only when the
// boundary multiplier is < 1, otherwise inconclusive.
UciCertificate uci_sufficient(const AnalyticMap& map, const DenjoyWolffData& dw, int n_max = 16);

KernelFunction kernel(cplx a);
AnalyticMap kernel_as_map(cplx a);

// c * K_a / (K_a ∘ phi); requires phi(a) = a.
AnalyticMap canonical_weight(const AnalyticMap& phi, cplx a, cplx c);

// (zeta, tau): zeta = sqrt(1-|a|^2)/(1 - conj(a) z), tau = (a - z)/(1 - conj(a) z).
std::pair<AnalyticMap, AnalyticMap> conjugation_pair(cplx a);

// Symbols (f, g) of W_{zeta,tau} W_{psi,phi} W_{zeta,tau}.
std::pair<AnalyticMap, AnalyticMap> conjugated_symbols(const AnalyticMap& psi,
                                                       const AnalyticMap& phi, cplx a);

// Value of a symbol at |b| = 1: direct evaluation when the representation is
// defined there, radial-limit extrapolation otherwise.
cplx value_at_boundary(const AnalyticMap& map, cplx b);

// Sup-norm estimate by boundary sampling with radius refinement.
double sup_norm_estimate(const AnalyticMap& map, int samples = 4096);

}  // namespace wco
