#pragma once

#include <complex>
#include <vector>

namespace wco {

using cplx = std::complex<double>;

// Dense univariate polynomial with complex coefficients, lowest degree first.
// The zero polynomial is represented by an empty coefficient vector.
struct Poly {
    std::vector<cplx> c;

    Poly() = default;
    explicit Poly(std::vector<cplx> coeffs) : c(std::move(coeffs)) { trim(); }
    static Poly constant(cplx v);
    static Poly variable();  // z

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    cplx coeff(std::size_t k) const { return k < c.size() ? c[k] : cplx(0.0); }

    cplx eval(cplx z) const;
    Poly derivative() const;
    void trim();
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(cplx s, const Poly& p);
Poly poly_compose(const Poly& outer, const Poly& inner);

// Roots of p via the companion-matrix eigenvalue problem.
std::vector<cplx> poly_roots(const Poly& p);

// ---- truncated power series, fixed length N (coefficients 0..N-1) ----

using Series = std::vector<cplx>;

Series series_from_poly(const Poly& p, int n);
Series series_add(const Series& a, const Series& b);
Series series_sub(const Series& a, const Series& b);
Series series_mul(const Series& a, const Series& b);
// Throws PoleOnDomain when b[0] == 0.
Series series_div(const Series& a, const Series& b);
// exp of a series; nonzero constant term handled via the e^{c0} factor.
Series series_exp(const Series& s);
// Horner evaluation of a polynomial at a series argument.
Series poly_at_series(const Poly& p, const Series& s);

}  // namespace wco
