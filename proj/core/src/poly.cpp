#include "wco/poly.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "wco/errors.hpp"

namespace wco {

Poly Poly::constant(cplx v) {
    Poly p;
    if (v != cplx(0.0)) p.c = {v};
    return p;
}

Poly Poly::variable() {
    Poly p;
    p.c = {cplx(0.0), cplx(1.0)};
    return p;
}

cplx Poly::eval(cplx z) const {
    cplx r(0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
    return r;
}

Poly Poly::derivative() const {
    Poly d;
    for (std::size_t k = 1; k < c.size(); ++k) d.c.push_back(double(k) * c[k]);
    d.trim();
    return d;
}

void Poly::trim() {
    while (!c.empty() && c.back() == cplx(0.0)) c.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), cplx(0.0));
    for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.coeff(k) + b.coeff(k);
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), cplx(0.0));
    for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.coeff(k) - b.coeff(k);
    r.trim();
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, cplx(0.0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

Poly operator*(cplx s, const Poly& p) {
    Poly r = p;
    for (auto& v : r.c) v *= s;
    r.trim();
    return r;
}

Poly poly_compose(const Poly& outer, const Poly& inner) {
    Poly r;
    for (auto it = outer.c.rbegin(); it != outer.c.rend(); ++it) {
        r = r * inner;
        r = r + Poly::constant(*it);
    }
    return r;
}

std::vector<cplx> poly_roots(const Poly& p) {
    const int n = p.degree();
    if (n < 1) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    const cplx lead = p.c.back();
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.c[i] / lead;
    for (int i = 1; i < n; ++i) companion(i, i - 1) = cplx(1.0);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<cplx> roots;
    roots.reserve(n);
    for (int i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()(i));
    return roots;
}

Series series_from_poly(const Poly& p, int n) {
    Series s(static_cast<std::size_t>(n), cplx(0.0));
    for (int k = 0; k < n; ++k) s[k] = p.coeff(k);
    return s;
}

Series series_add(const Series& a, const Series& b) {
    Series r(a);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
}

Series series_sub(const Series& a, const Series& b) {
    Series r(a);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
    return r;
}

Series series_mul(const Series& a, const Series& b) {
    const std::size_t n = a.size();
    Series r(n, cplx(0.0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == cplx(0.0)) continue;
        for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Series series_div(const Series& a, const Series& b) {
    const std::size_t n = a.size();
    if (b.empty() || b[0] == cplx(0.0))
        throw PoleOnDomain("series division by a series vanishing at 0");
    Series r(n, cplx(0.0));
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc = a[k];
        for (std::size_t j = 1; j <= k; ++j) acc -= b[j] * r[k - j];
        r[k] = acc / b[0];
    }
    return r;
}

Series series_exp(const Series& s) {
    const std::size_t n = s.size();
    Series r(n, cplx(0.0));
    if (n == 0) return r;
    const cplx scale = std::exp(s[0]);
    r[0] = cplx(1.0);
    // exp of the zero-constant-term part via E' = t' E.
    for (std::size_t k = 1; k < n; ++k) {
        cplx acc(0.0);
        for (std::size_t j = 1; j <= k; ++j) acc += double(j) * s[j] * r[k - j];
        r[k] = acc / double(k);
    }
    for (auto& v : r) v *= scale;
    return r;
}

Series poly_at_series(const Poly& p, const Series& s) {
    Series r(s.size(), cplx(0.0));
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        r = series_mul(r, s);
        r[0] += *it;
    }
    return r;
}

}  // namespace wco
