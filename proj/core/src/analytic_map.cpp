#include "wco/analytic_map.hpp"

#include <cmath>

#include "wco/errors.hpp"

namespace wco {

Mobius Mobius::compose(const Mobius& g) const {
    // coefficient-matrix product
    Mobius r{a * g.a + b * g.c, a * g.b + b * g.d, c * g.a + d * g.c, c * g.b + d * g.d};
    r.normalize();
    return r;
}

Mobius Mobius::power(unsigned n) const {
    Mobius r{1.0, 0.0, 0.0, 1.0};
    Mobius base = *this;
    while (n > 0) {
        if (n & 1u) r = r.compose(base);
        base = base.compose(base);
        n >>= 1u;
    }
    return r;
}

void Mobius::normalize() {
    const double m = std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
    if (m > 0.0) {
        a /= m;
        b /= m;
        c /= m;
        d /= m;
    }
}

struct AnalyticMap::Node {
    enum class Kind { Rational, Exp, Add, Sub, Mul, Div, Compose };
    Kind kind = Kind::Rational;
    AnalyticMap::Rational rat;
    std::shared_ptr<const Node> lhs, rhs;  // Exp uses lhs only
};

namespace {

double poly_scale(const Poly& p) {
    double s = 0.0;
    for (const auto& v : p.c) s += std::abs(v);
    return s;
}

}  // namespace

AnalyticMap::AnalyticMap() {
    auto n = std::make_shared<Node>();
    n->rat.num = Poly();
    n->rat.den = Poly::constant(1.0);
    node_ = std::move(n);
}

AnalyticMap AnalyticMap::constant(cplx v) {
    return rational(Poly::constant(v), Poly::constant(1.0));
}

AnalyticMap AnalyticMap::identity() {
    return rational(Poly::variable(), Poly::constant(1.0));
}

AnalyticMap AnalyticMap::mobius(cplx a, cplx b, cplx c, cplx d) {
    const double scale = std::max(std::abs(a), std::abs(b)) * std::max(std::abs(c), std::abs(d));
    if (std::abs(a * d - b * c) <= 1e-14 * std::max(scale, 1e-300))
        throw PreconditionViolation("mobius: ad - bc must be nonzero");
    return rational(Poly({b, a}), Poly({d, c}));
}

AnalyticMap AnalyticMap::mobius(const Mobius& m) {
    return mobius(m.a, m.b, m.c, m.d);
}

AnalyticMap AnalyticMap::polynomial(std::vector<cplx> coeffs) {
    return rational(Poly(std::move(coeffs)), Poly::constant(1.0));
}

AnalyticMap AnalyticMap::rational(Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZeroStructure("rational: denominator is identically zero");
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Rational;
    n->rat.num = std::move(num);
    n->rat.den = std::move(den);
    return AnalyticMap(std::move(n));
}

AnalyticMap AnalyticMap::exp_of(AnalyticMap inner) {
    if (auto c = inner.constant_value()) return constant(std::exp(*c));
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Exp;
    n->lhs = inner.node_;
    return AnalyticMap(std::move(n));
}

const AnalyticMap::Rational* AnalyticMap::rational_form() const {
    if (node_->kind != Node::Kind::Rational) return nullptr;
    return &node_->rat;
}

std::optional<Mobius> AnalyticMap::as_mobius() const {
    const Rational* r = rational_form();
    if (!r) return std::nullopt;
    if (r->num.degree() > 1 || r->den.degree() > 1) return std::nullopt;
    Mobius m{r->num.coeff(1), r->num.coeff(0), r->den.coeff(1), r->den.coeff(0)};
    const double scale = std::max(std::abs(m.a), std::abs(m.b)) * std::max(std::abs(m.c), std::abs(m.d));
    if (std::abs(m.det()) <= 1e-12 * std::max(scale, 1e-300)) return std::nullopt;
    return m;
}

std::optional<cplx> AnalyticMap::constant_value() const {
    switch (node_->kind) {
        case Node::Kind::Rational: {
            const auto& r = node_->rat;
            if (r.num.degree() > 0 || r.den.degree() > 0) return std::nullopt;
            if (r.num.is_zero()) return cplx(0.0);
            return r.num.coeff(0) / r.den.coeff(0);
        }
        case Node::Kind::Exp: {
            auto c = AnalyticMap(node_->lhs).constant_value();
            if (!c) return std::nullopt;
            return std::exp(*c);
        }
        default: {
            auto l = AnalyticMap(node_->lhs).constant_value();
            auto r = AnalyticMap(node_->rhs).constant_value();
            if (!l || !r) return std::nullopt;
            switch (node_->kind) {
                case Node::Kind::Add: return *l + *r;
                case Node::Kind::Sub: return *l - *r;
                case Node::Kind::Mul: return *l * *r;
                case Node::Kind::Div: return *l / *r;
                case Node::Kind::Compose: return *l;  // constant outer
                default: return std::nullopt;
            }
        }
    }
}

cplx AnalyticMap::eval(cplx z) const {
    switch (node_->kind) {
        case Node::Kind::Rational: {
            const auto& r = node_->rat;
            const cplx q = r.den.eval(z);
            if (std::abs(q) <= 1e-14 * std::max(poly_scale(r.den), 1e-300))
                throw PoleOnDomain("eval: denominator vanishes at the evaluation point");
            return r.num.eval(z) / q;
        }
        case Node::Kind::Exp:
            return std::exp(AnalyticMap(node_->lhs).eval(z));
        case Node::Kind::Add:
            return AnalyticMap(node_->lhs).eval(z) + AnalyticMap(node_->rhs).eval(z);
        case Node::Kind::Sub:
            return AnalyticMap(node_->lhs).eval(z) - AnalyticMap(node_->rhs).eval(z);
        case Node::Kind::Mul:
            return AnalyticMap(node_->lhs).eval(z) * AnalyticMap(node_->rhs).eval(z);
        case Node::Kind::Div: {
            const cplx d = AnalyticMap(node_->rhs).eval(z);
            if (std::abs(d) <= 1e-300) throw PoleOnDomain("eval: division by zero");
            return AnalyticMap(node_->lhs).eval(z) / d;
        }
        case Node::Kind::Compose:
            return AnalyticMap(node_->lhs).eval(AnalyticMap(node_->rhs).eval(z));
    }
    throw Error("eval: unreachable");
}

cplx AnalyticMap::derivative(cplx z) const {
    switch (node_->kind) {
        case Node::Kind::Rational: {
            const auto& r = node_->rat;
            const cplx q = r.den.eval(z);
            if (std::abs(q) <= 1e-14 * std::max(poly_scale(r.den), 1e-300))
                throw PoleOnDomain("derivative: denominator vanishes at the evaluation point");
            return (r.num.derivative().eval(z) * q - r.num.eval(z) * r.den.derivative().eval(z)) / (q * q);
        }
        case Node::Kind::Exp: {
            AnalyticMap inner(node_->lhs);
            return std::exp(inner.eval(z)) * inner.derivative(z);
        }
        case Node::Kind::Add:
            return AnalyticMap(node_->lhs).derivative(z) + AnalyticMap(node_->rhs).derivative(z);
        case Node::Kind::Sub:
            return AnalyticMap(node_->lhs).derivative(z) - AnalyticMap(node_->rhs).derivative(z);
        case Node::Kind::Mul: {
            AnalyticMap l(node_->lhs), r(node_->rhs);
            return l.derivative(z) * r.eval(z) + l.eval(z) * r.derivative(z);
        }
        case Node::Kind::Div: {
            AnalyticMap l(node_->lhs), r(node_->rhs);
            const cplx rv = r.eval(z);
            if (std::abs(rv) <= 1e-300) throw PoleOnDomain("derivative: division by zero");
            return (l.derivative(z) * rv - l.eval(z) * r.derivative(z)) / (rv * rv);
        }
        case Node::Kind::Compose: {
            AnalyticMap l(node_->lhs), r(node_->rhs);
            return l.derivative(r.eval(z)) * r.derivative(z);
        }
    }
    throw Error("derivative: unreachable");
}

Series AnalyticMap::substitute(const Series& arg) const {
    switch (node_->kind) {
        case Node::Kind::Rational: {
            const auto& r = node_->rat;
            return series_div(poly_at_series(r.num, arg), poly_at_series(r.den, arg));
        }
        case Node::Kind::Exp:
            return series_exp(AnalyticMap(node_->lhs).substitute(arg));
        case Node::Kind::Add:
            return series_add(AnalyticMap(node_->lhs).substitute(arg), AnalyticMap(node_->rhs).substitute(arg));
        case Node::Kind::Sub:
            return series_sub(AnalyticMap(node_->lhs).substitute(arg), AnalyticMap(node_->rhs).substitute(arg));
        case Node::Kind::Mul:
            return series_mul(AnalyticMap(node_->lhs).substitute(arg), AnalyticMap(node_->rhs).substitute(arg));
        case Node::Kind::Div:
            return series_div(AnalyticMap(node_->lhs).substitute(arg), AnalyticMap(node_->rhs).substitute(arg));
        case Node::Kind::Compose:
            return AnalyticMap(node_->lhs).substitute(AnalyticMap(node_->rhs).substitute(arg));
    }
    throw Error("substitute: unreachable");
}

Series AnalyticMap::taylor(int n) const {
    if (n < 1) throw PreconditionViolation("taylor: need at least one coefficient");
    Series id(static_cast<std::size_t>(n), cplx(0.0));
    if (n > 1) id[1] = cplx(1.0);
    return substitute(id);
}

AnalyticMap AnalyticMap::binary(int tag, const AnalyticMap& l, const AnalyticMap& r) {
    using K = Node::Kind;
    auto n = std::make_shared<Node>();
    switch (tag) {
        case 0: n->kind = K::Add; break;
        case 1: n->kind = K::Sub; break;
        case 2: n->kind = K::Mul; break;
        case 3: n->kind = K::Div; break;
        default: n->kind = K::Compose; break;
    }
    n->lhs = l.node_;
    n->rhs = r.node_;
    return AnalyticMap(std::move(n));
}

AnalyticMap operator+(const AnalyticMap& x, const AnalyticMap& y) {
    const auto* rx = x.rational_form();
    const auto* ry = y.rational_form();
    if (rx && ry)
        return AnalyticMap::rational(rx->num * ry->den + ry->num * rx->den, rx->den * ry->den);
    return AnalyticMap::binary(0, x, y);
}

AnalyticMap operator-(const AnalyticMap& x, const AnalyticMap& y) {
    const auto* rx = x.rational_form();
    const auto* ry = y.rational_form();
    if (rx && ry)
        return AnalyticMap::rational(rx->num * ry->den - ry->num * rx->den, rx->den * ry->den);
    return AnalyticMap::binary(1, x, y);
}

AnalyticMap operator*(const AnalyticMap& x, const AnalyticMap& y) {
    const auto* rx = x.rational_form();
    const auto* ry = y.rational_form();
    if (rx && ry) return AnalyticMap::rational(rx->num * ry->num, rx->den * ry->den);
    return AnalyticMap::binary(2, x, y);
}

AnalyticMap operator/(const AnalyticMap& x, const AnalyticMap& y) {
    const auto* rx = x.rational_form();
    const auto* ry = y.rational_form();
    if (ry && ry->num.is_zero())
        throw DivisionByZeroStructure("division by the zero function");
    if (rx && ry) return AnalyticMap::rational(rx->num * ry->den, rx->den * ry->num);
    return AnalyticMap::binary(3, x, y);
}

AnalyticMap operator-(const AnalyticMap& x) {
    return AnalyticMap::constant(-1.0) * x;
}

AnalyticMap compose(const AnalyticMap& outer, const AnalyticMap& inner) {
    if (auto c = inner.constant_value()) return AnalyticMap::constant(outer.eval(*c));
    if (auto c = outer.constant_value()) return AnalyticMap::constant(*c);
    // identity inner: f∘z = f
    if (const auto* ri = inner.rational_form()) {
        if (ri->num.degree() == 1 && ri->num.coeff(0) == cplx(0.0) && ri->num.coeff(1) == cplx(1.0) &&
            ri->den.degree() == 0 && ri->den.coeff(0) == cplx(1.0))
            return outer;
    }
    if (outer.node_->kind == AnalyticMap::Node::Kind::Exp)
        return AnalyticMap::exp_of(compose(AnalyticMap(outer.node_->lhs), inner));
    const auto* ro = outer.rational_form();
    const auto* ri = inner.rational_form();
    if (ro && ri) {
        // homogenized rational composition: P(U/V)/Q(U/V) with common V^m
        const int m = std::max(std::max(ro->num.degree(), ro->den.degree()), 0);
        Poly num, den;
        Poly upow = Poly::constant(1.0);
        std::vector<Poly> upows;
        for (int k = 0; k <= m; ++k) {
            upows.push_back(upow);
            upow = upow * ri->num;
        }
        Poly vpow = Poly::constant(1.0);
        for (int k = m; k >= 0; --k) {
            num = num + ro->num.coeff(k) * (upows[k] * vpow);
            den = den + ro->den.coeff(k) * (upows[k] * vpow);
            vpow = vpow * ri->den;
        }
        return AnalyticMap::rational(num, den);
    }
    return AnalyticMap::binary(4, outer, inner);
}

AnalyticMap AnalyticMap::iterate(unsigned n) const {
    if (n == 0) return identity();
    if (auto m = as_mobius()) {
        const Mobius p = m->power(n);
        return rational(Poly({p.b, p.a}), Poly({p.d, p.c}));
    }
    AnalyticMap r = *this;
    for (unsigned k = 1; k < n; ++k) r = compose(r, *this);
    return r;
}

}  // namespace wco
