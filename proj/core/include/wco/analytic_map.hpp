#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "wco/poly.hpp"

namespace wco {

// Linear-fractional map (a z + b)/(c z + d) with ad - bc != 0.
struct Mobius {
    cplx a, b, c, d;

    cplx det() const { return a * d - b * c; }
    cplx operator()(cplx z) const { return (a * z + b) / (c * z + d); }
    cplx derivative(cplx z) const {
        const cplx q = c * z + d;
        return det() / (q * q);
    }
    Mobius compose(const Mobius& inner) const;
    Mobius power(unsigned n) const;
    void normalize();  // scale coefficients to unit max modulus
};

// Immutable analytic function on the disk. Rational subtrees are kept in
// exact numerator/denominator form; exp and mixed expressions become lazy
// operation nodes evaluated structurally.
class AnalyticMap {
public:
    struct Rational {
        Poly num, den;
    };

    AnalyticMap();  // the constant 0
    static AnalyticMap constant(cplx v);
    static AnalyticMap identity();  // z
    static AnalyticMap mobius(cplx a, cplx b, cplx c, cplx d);
    static AnalyticMap mobius(const Mobius& m);
    static AnalyticMap polynomial(std::vector<cplx> coeffs);
    static AnalyticMap rational(Poly num, Poly den);
    static AnalyticMap exp_of(AnalyticMap inner);

    cplx eval(cplx z) const;
    cplx derivative(cplx z) const;
    Series taylor(int n) const;

    // Exact rational form, or nullptr when an exp node is involved.
    const Rational* rational_form() const;
    std::optional<Mobius> as_mobius() const;
    std::optional<cplx> constant_value() const;
    bool is_transcendental() const { return rational_form() == nullptr; }

    AnalyticMap iterate(unsigned n) const;

    friend AnalyticMap operator+(const AnalyticMap&, const AnalyticMap&);
    friend AnalyticMap operator-(const AnalyticMap&, const AnalyticMap&);
    friend AnalyticMap operator*(const AnalyticMap&, const AnalyticMap&);
    friend AnalyticMap operator/(const AnalyticMap&, const AnalyticMap&);
    friend AnalyticMap operator-(const AnalyticMap&);
    friend AnalyticMap compose(const AnalyticMap& outer, const AnalyticMap& inner);

private:
    struct Node;
    explicit AnalyticMap(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static AnalyticMap binary(int tag, const AnalyticMap& l, const AnalyticMap& r);
    Series substitute(const Series& arg) const;  // Taylor coefficients of this∘g
    std::shared_ptr<const Node> node_;
};

AnalyticMap compose(const AnalyticMap& outer, const AnalyticMap& inner);

}  // namespace wco
