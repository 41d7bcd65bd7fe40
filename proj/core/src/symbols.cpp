#include "wco/symbols.hpp"

#include <cmath>
#include <numbers>

#include "wco/errors.hpp"

namespace wco {

namespace {

constexpr double kPi = std::numbers::pi;

cplx circumcenter(cplx p, cplx q, cplx r) {
    const cplx num = std::norm(p) * (q - r) + std::norm(q) * (r - p) + std::norm(r) * (p - q);
    const cplx den = std::conj(p) * (q - r) + std::conj(q) * (r - p) + std::conj(r) * (p - q);
    if (std::abs(den) < 1e-14 * std::max(1.0, std::abs(num)))
        throw UnsupportedRepresentation("circle image degenerates to a line");
    return num / den;
}

}  // namespace

Circle mobius_unit_circle_image(const Mobius& m) {
    const cplx p = m(cplx(1.0));
    const cplx q = m(cplx(-1.0));
    const cplx r = m(cplx(0.0, 1.0));
    const cplx c = circumcenter(p, q, r);
    return Circle{c, std::abs(p - c)};
}

SelfMapStatus self_map_check(const AnalyticMap& map, int grid_size) {
    if (grid_size < 64) grid_size = 64;
    if (auto c = map.constant_value())
        return std::abs(*c) <= 1.0 + 1e-12 ? SelfMapStatus::verified : SelfMapStatus::refuted;

    const double radii[] = {0.9, 0.99, 0.999, 1.0 - 1e-6, 1.0};
    double sup = 0.0;
    try {
        for (double r : radii) {
            for (int k = 0; k < grid_size; ++k) {
                const double th = 2.0 * kPi * k / grid_size;
                const cplx z = r * std::polar(1.0, th);
                sup = std::max(sup, std::abs(map.eval(z)));
                if (sup > 1.0 + 1e-9) return SelfMapStatus::refuted;
            }
        }
    } catch (const PoleOnDomain&) {
        return SelfMapStatus::refuted;
    }

    if (auto m = map.as_mobius()) {
        const Circle img = mobius_unit_circle_image(*m);
        const double reach = std::abs(img.center) + img.radius;
        if (reach <= 1.0 + 1e-12) return SelfMapStatus::verified;
        if (reach > 1.0 + 1e-9) return SelfMapStatus::refuted;
    }
    return SelfMapStatus::unknown;
}

namespace {

DenjoyWolffData mobius_denjoy_wolff(const AnalyticMap& map, const Mobius& m) {
    // fixed points: c z^2 + (d - a) z - b = 0
    const double scale = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
    const cplx A = m.c, B = m.d - m.a, C = -m.b;
    std::vector<cplx> roots;
    if (std::abs(A) <= 1e-14 * scale) {
        if (std::abs(B) <= 1e-14 * scale)
            throw NoConvergence("denjoy_wolff: identity map has no unique fixed point");
        roots.push_back(-C / B);
    } else {
        const cplx disc = std::sqrt(B * B - 4.0 * A * C);
        roots.push_back((-B + disc) / (2.0 * A));
        roots.push_back((-B - disc) / (2.0 * A));
    }

    // interior fixed point wins; unimodular multiplier there means an
    // elliptic automorphism, which has no Denjoy-Wolff point
    for (const cplx& z : roots) {
        if (std::abs(z) < 1.0 - 1e-9) {
            const double mult = std::abs(m.derivative(z));
            if (std::abs(mult - 1.0) <= 1e-9)
                throw NoConvergence("denjoy_wolff: elliptic automorphism");
            return DenjoyWolffData{z, mult, DwLocation::interior, DwMethod::closed_form,
                                   std::abs(map.eval(z) - z)};
        }
    }
    const DenjoyWolffData* best = nullptr;
    DenjoyWolffData cand;
    bool have = false;
    for (const cplx& z : roots) {
        if (std::abs(std::abs(z) - 1.0) > 1e-9) continue;
        const double mult = std::abs(m.derivative(z));
        if (!have || mult < cand.multiplier) {
            cand = DenjoyWolffData{z / std::abs(z), mult, DwLocation::boundary,
                                   DwMethod::closed_form, std::abs(map.eval(z) - z)};
            have = true;
        }
    }
    (void)best;
    if (!have) throw NoConvergence("denjoy_wolff: no fixed point in the closed disk");
    if (cand.multiplier > 1.0 + 1e-9)
        throw NoConvergence("denjoy_wolff: boundary multiplier exceeds 1");
    return cand;
}

// Julia-Caratheodory radial quotient, extrapolated by a least-squares linear
// fit against (1 - r) over the last 8 samples.
double julia_caratheodory_multiplier(const AnalyticMap& map, cplx a, double* residual) {
    std::vector<double> xs, ys;
    for (int k = 10; k <= 30; ++k) {
        const double r = 1.0 - std::pow(2.0, -k);
        const double q = (1.0 - std::abs(map.eval(r * a))) / (1.0 - r);
        xs.push_back(1.0 - r);
        ys.push_back(q);
    }
    const std::size_t m = 8;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = xs.size() - m; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double n = double(m);
    const double denom = n * sxx - sx * sx;
    double alpha;
    if (std::abs(denom) < 1e-30) {
        alpha = sy / n;
    } else {
        const double beta = (n * sxy - sx * sy) / denom;
        alpha = (sy - beta * sx) / n;
    }
    if (residual) *residual = std::abs(ys.back() - alpha);
    if (alpha <= 0.0) alpha = ys.back();
    return std::min(alpha, 1.0);
}

DenjoyWolffData orbit_denjoy_wolff(const AnalyticMap& map) {
    cplx z(0.0);
    cplx dir_prev(0.0);
    const long max_iter = 2'000'000;
    for (long it = 0; it < max_iter; ++it) {
        const cplx zn = map.eval(z);
        if (std::abs(zn - z) < 1e-12) {
            // interior fixed point; polish with Newton on phi(z) - z
            cplx p = zn;
            for (int k = 0; k < 30; ++k) {
                const cplx f = map.eval(p) - p;
                const cplx df = map.derivative(p) - 1.0;
                if (std::abs(df) < 1e-14) break;
                const cplx step = f / df;
                p -= step;
                if (std::abs(step) < 1e-15) break;
            }
            // a converged orbit with multiplier this close to 1 means the true
            // fixed point sits on the boundary (parabolic approach), since an
            // interior attractor with such a multiplier could not have settled
            const double mult_here = std::abs(map.derivative(p));
            if (std::abs(p) <= 1.0 - 1e-6 && mult_here < 1.0 - 1e-6)
                return DenjoyWolffData{p, mult_here, DwLocation::interior,
                                       DwMethod::orbit_iteration, std::abs(map.eval(p) - p)};
            const cplx a = p / std::abs(p);
            double res = 0.0;
            const double mult = julia_caratheodory_multiplier(map, a, &res);
            return DenjoyWolffData{a, mult, DwLocation::boundary, DwMethod::orbit_iteration, res};
        }
        if (std::abs(zn) > 1.0 - 1e-6) {
            const cplx dir = zn / std::abs(zn);
            if (std::abs(dir - dir_prev) < 1e-11) {
                double res = 0.0;
                const double mult = julia_caratheodory_multiplier(map, dir, &res);
                return DenjoyWolffData{dir, mult, DwLocation::boundary, DwMethod::orbit_iteration,
                                       res};
            }
            dir_prev = dir;
        }
        z = zn;
    }
    throw NoConvergence("denjoy_wolff: orbit did not converge (elliptic automorphism or stall)");
}

}  // namespace

DenjoyWolffData denjoy_wolff(const AnalyticMap& map) {
    if (self_map_check(map) == SelfMapStatus::refuted)
        throw PreconditionViolation("denjoy_wolff: not a self-map of the disk");
    if (auto m = map.as_mobius()) return mobius_denjoy_wolff(map, *m);
    return orbit_denjoy_wolff(map);
}

DenjoyWolffData denjoy_wolff_orbit(const AnalyticMap& map) {
    if (self_map_check(map) == SelfMapStatus::refuted)
        throw PreconditionViolation("denjoy_wolff: not a self-map of the disk");
    return orbit_denjoy_wolff(map);
}

std::vector<BoundaryFixedPoint> boundary_fixed_points(const AnalyticMap& map, int n_max) {
    if (self_map_check(map) == SelfMapStatus::refuted)
        throw PreconditionViolation("boundary_fixed_points: not a self-map of the disk");
    if (map.is_transcendental())
        throw UnsupportedRepresentation(
            "boundary_fixed_points: exact root-finding needs a rational representation");

    std::vector<BoundaryFixedPoint> out;
    for (int n = 1; n <= n_max; ++n) {
        const AnalyticMap phin = map.iterate(static_cast<unsigned>(n));
        const auto* r = phin.rational_form();
        const Poly fixed_poly = r->num - Poly::variable() * r->den;
        const Poly dfixed = fixed_poly.derivative();
        for (cplx w : poly_roots(fixed_poly)) {
            if (std::abs(std::abs(w) - 1.0) > 1e-6) continue;
            for (int k = 0; k < 40; ++k) {  // Newton polish
                const cplx f = fixed_poly.eval(w);
                const cplx df = dfixed.eval(w);
                if (std::abs(df) < 1e-14) break;
                const cplx step = f / df;
                w -= step;
                if (std::abs(step) < 1e-15) break;
            }
            if (std::abs(std::abs(w) - 1.0) > 1e-8) continue;
            if (std::abs(phin.eval(w) - w) > 1e-8) continue;
            bool dup = false;
            for (const auto& existing : out)
                if (existing.n == n && std::abs(existing.point - w) < 1e-8) dup = true;
            if (!dup) out.push_back(BoundaryFixedPoint{n, w, phin.derivative(w)});
        }
    }
    return out;
}

UciCertificate uci_sufficient(const AnalyticMap& map, const DenjoyWolffData& dw, int n_max) {
    if (dw.location != DwLocation::boundary)
        throw PreconditionViolation("uci_sufficient: requires a boundary Denjoy-Wolff point");
    if (dw.multiplier >= 1.0 - 1e-9) return UciCertificate{false, 0};  // test needs phi'(a) < 1

    for (int n = 1; n <= n_max; ++n) {
        const AnalyticMap phin = map.iterate(static_cast<unsigned>(n));
        if (auto m = phin.as_mobius()) {
            const Circle img = mobius_unit_circle_image(*m);
            const double reach = std::abs(img.center) + img.radius;
            if (reach > 1.0 + 1e-12) continue;
            if (reach < 1.0 - 1e-12) return UciCertificate{true, n};
            if (std::abs(img.center) < 1e-12) continue;  // full-circle tangency cannot happen
            const cplx touch = img.center * (1.0 + img.radius / std::abs(img.center));
            if (std::abs(touch - dw.point) <= 1e-3) return UciCertificate{true, n};
            continue;
        }
        const int samples = 4096;
        bool ok = true;
        for (int k = 0; k < samples && ok; ++k) {
            const double th = 2.0 * kPi * k / samples;
            const cplx w = std::polar(1.0, th);
            if (std::abs(w - dw.point) <= 1e-3) continue;
            try {
                if (std::abs(phin.eval(w)) >= 1.0 - 1e-9) ok = false;
            } catch (const PoleOnDomain&) {
                ok = false;
            }
        }
        if (ok) return UciCertificate{true, n};
    }
    return UciCertificate{false, 0};
}

KernelFunction kernel(cplx a) {
    if (std::abs(a) >= 1.0) throw AnchorNotInterior("kernel: anchor must satisfy |a| < 1");
    return KernelFunction{a};
}

AnalyticMap kernel_as_map(cplx a) {
    if (std::abs(a) >= 1.0) throw AnchorNotInterior("kernel: anchor must satisfy |a| < 1");
    return AnalyticMap::rational(Poly::constant(1.0), Poly({cplx(1.0), -std::conj(a)}));
}

AnalyticMap canonical_weight(const AnalyticMap& phi, cplx a, cplx c) {
    if (std::abs(a) >= 1.0) throw AnchorNotInterior("canonical_weight: |a| < 1 required");
    if (std::abs(phi.eval(a) - a) > 1e-10)
        throw NotFixedPoint("canonical_weight: phi(a) != a");
    if (std::abs(a) < 1e-15) return AnalyticMap::constant(c);
    const cplx abar = std::conj(a);
    const AnalyticMap numerator =
        AnalyticMap::constant(c) * (AnalyticMap::constant(1.0) - AnalyticMap::constant(abar) * phi);
    const AnalyticMap denominator =
        AnalyticMap::rational(Poly({cplx(1.0), -abar}), Poly::constant(1.0));
    return numerator / denominator;
}

std::pair<AnalyticMap, AnalyticMap> conjugation_pair(cplx a) {
    if (std::abs(a) >= 1.0) throw AnchorNotInterior("conjugation_pair: |a| < 1 required");
    const cplx abar = std::conj(a);
    const double s = std::sqrt(1.0 - std::norm(a));
    AnalyticMap zeta = AnalyticMap::rational(Poly::constant(s), Poly({cplx(1.0), -abar}));
    AnalyticMap tau = AnalyticMap::mobius(cplx(-1.0), a, -abar, cplx(1.0));
    return {zeta, tau};
}

std::pair<AnalyticMap, AnalyticMap> conjugated_symbols(const AnalyticMap& psi,
                                                       const AnalyticMap& phi, cplx a) {
    if (std::abs(a) >= 1.0) throw AnchorNotInterior("conjugated_symbols: |a| < 1 required");
    if (std::abs(phi.eval(a) - a) > 1e-10)
        throw NotFixedPoint("conjugated_symbols: phi(a) != a");
    auto [zeta, tau] = conjugation_pair(a);
    const AnalyticMap phi_tau = compose(phi, tau);
    AnalyticMap f = zeta * compose(psi, tau) * compose(zeta, phi_tau);
    AnalyticMap g = compose(tau, phi_tau);
    return {f, g};
}

cplx value_at_boundary(const AnalyticMap& map, cplx b) {
    b /= std::abs(b);
    try {
        return map.eval(b);
    } catch (const PoleOnDomain&) {
        // radial limit
        cplx prev = map.eval((1.0 - std::pow(2.0, -8)) * b);
        for (int k = 9; k <= 30; ++k) {
            const cplx cur = map.eval((1.0 - std::pow(2.0, -k)) * b);
            if (std::abs(cur - prev) < 1e-8 * std::max(1.0, std::abs(cur)) && k >= 20) return cur;
            prev = cur;
        }
        throw NoConvergence("value_at_boundary: radial limit did not settle");
    }
}

double sup_norm_estimate(const AnalyticMap& map, int samples) {
    const double radii[] = {1.0, 1.0 - std::pow(2.0, -10), 1.0 - std::pow(2.0, -12),
                            1.0 - std::pow(2.0, -14)};
    double sup = 0.0;
    for (double r : radii) {
        try {
            for (int k = 0; k < samples; ++k) {
                const double th = 2.0 * kPi * k / samples;
                sup = std::max(sup, std::abs(map.eval(r * std::polar(1.0, th))));
            }
        } catch (const PoleOnDomain&) {
            continue;  // symbol not defined on this circle; inner radii still contribute
        }
    }
    return sup;
}

}  // namespace wco
