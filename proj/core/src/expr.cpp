#include "wco/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "wco/errors.hpp"

namespace wco {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "'", pos);
    }

    bool accept_word(const std::string& w) {
        skip_ws();
        if (text.compare(pos, w.size(), w) != 0) return false;
        const std::size_t after = pos + w.size();
        if (after < text.size() &&
            (std::isalnum(static_cast<unsigned char>(text[after])) || text[after] == '_'))
            return false;
        pos = after;
        return true;
    }

    AstPtr parse_expr() {
        AstPtr node = parse_term();
        while (true) {
            if (accept('+')) {
                node = make_bin(Ast::Kind::Add, node, parse_term());
            } else if (accept('-')) {
                node = make_bin(Ast::Kind::Sub, node, parse_term());
            } else {
                return node;
            }
        }
    }

    AstPtr parse_term() {
        AstPtr node = parse_factor();
        while (true) {
            if (accept('*')) {
                node = make_bin(Ast::Kind::Mul, node, parse_factor());
            } else if (accept('/')) {
                node = make_bin(Ast::Kind::Div, node, parse_factor());
            } else {
                return node;
            }
        }
    }

    AstPtr parse_factor() {
        if (accept('-')) {
            auto n = std::make_shared<Ast>();
            n->kind = Ast::Kind::Neg;
            n->lhs = parse_factor();
            return n;
        }
        return parse_atom();
    }

    AstPtr parse_atom() {
        skip_ws();
        if (pos >= text.size()) throw SyntaxError("unexpected end of input", pos);
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number(false);
        if (c == 'i') return parse_imag_unit();
        if (accept_word("exp")) {
            expect('(');
            auto n = std::make_shared<Ast>();
            n->kind = Ast::Kind::Exp;
            n->lhs = parse_expr();
            expect(')');
            return n;
        }
        if (accept_word("compose")) {
            expect('(');
            auto n = std::make_shared<Ast>();
            n->kind = Ast::Kind::Compose;
            n->lhs = parse_expr();
            expect(',');
            n->rhs = parse_expr();
            expect(')');
            return n;
        }
        if (accept_word("mobius")) {
            expect('(');
            auto n = std::make_shared<Ast>();
            n->kind = Ast::Kind::MobiusCall;
            for (int k = 0; k < 4; ++k) {
                if (k > 0) expect(',');
                n->mobius[k] = parse_signed_number_value();
            }
            expect(')');
            return n;
        }
        if (accept_word("z")) {
            auto n = std::make_shared<Ast>();
            n->kind = Ast::Kind::Var;
            return n;
        }
        if (c == '(') {
            ++pos;
            AstPtr inner = parse_expr();
            expect(')');
            return inner;
        }
        throw SyntaxError("unexpected character", pos);
    }

    AstPtr parse_imag_unit() {
        // bare 'i'
        accept_word("i");
        auto n = std::make_shared<Ast>();
        n->kind = Ast::Kind::Number;
        n->value = 1.0;
        n->imaginary = true;
        return n;
    }

    AstPtr parse_number(bool /*unused*/) {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'))
            ++pos;
        // exponent part
        if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
            std::size_t e = pos + 1;
            if (e < text.size() && (text[e] == '+' || text[e] == '-')) ++e;
            if (e < text.size() && std::isdigit(static_cast<unsigned char>(text[e]))) {
                pos = e;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            }
        }
        double v = 0.0;
        const auto res = std::from_chars(text.data() + start, text.data() + pos, v);
        if (res.ec != std::errc() || res.ptr != text.data() + pos)
            throw SyntaxError("malformed number", start);
        auto n = std::make_shared<Ast>();
        n->kind = Ast::Kind::Number;
        n->value = v;
        if (pos < text.size() && text[pos] == 'i') {
            n->imaginary = true;
            ++pos;
        }
        return n;
    }

    cplx parse_signed_number_value() {
        cplx v = parse_one_literal();
        // optional second part: x+yi / x-yi
        skip_ws();
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            const bool minus = text[pos] == '-';
            ++pos;
            cplx w = parse_one_literal_unsigned();
            v += minus ? -w : w;
        }
        return v;
    }

    cplx parse_one_literal() {
        bool neg = accept('-');
        cplx v = parse_one_literal_unsigned();
        return neg ? -v : v;
    }

    cplx parse_one_literal_unsigned() {
        skip_ws();
        if (pos >= text.size() ||
            !(std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' || text[pos] == 'i'))
            throw SyntaxError("expected number", pos);
        AstPtr n = (text[pos] == 'i') ? parse_imag_unit() : parse_number(false);
        return n->imaginary ? cplx(0.0, n->value) : cplx(n->value, 0.0);
    }

    static AstPtr make_bin(Ast::Kind k, AstPtr l, AstPtr r) {
        auto n = std::make_shared<Ast>();
        n->kind = k;
        n->lhs = std::move(l);
        n->rhs = std::move(r);
        return n;
    }
};

int precedence(Ast::Kind k) {
    switch (k) {
        case Ast::Kind::Add:
        case Ast::Kind::Sub: return 1;
        case Ast::Kind::Mul:
        case Ast::Kind::Div: return 2;
        case Ast::Kind::Neg: return 3;
        default: return 4;  // atoms
    }
}

std::string format_real(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_complex_arg(cplx v) {
    // mobius() arguments: pure real or pure imaginary literals
    if (v.imag() == 0.0) return format_real(v.real());
    if (v.real() == 0.0) return format_real(v.imag()) + "i";
    if (v.imag() < 0.0) return format_real(v.real()) + "-" + format_real(-v.imag()) + "i";
    return format_real(v.real()) + "+" + format_real(v.imag()) + "i";
}

void print_node(const AstPtr& n, std::string& out, int parent_prec, bool rhs_of_binary) {
    const int prec = precedence(n->kind);
    const bool need_parens =
        prec < parent_prec || (rhs_of_binary && prec == parent_prec && parent_prec <= 2);
    if (need_parens) out += '(';
    switch (n->kind) {
        case Ast::Kind::Number:
            out += format_real(n->value);
            if (n->imaginary) out += 'i';
            break;
        case Ast::Kind::Var: out += 'z'; break;
        case Ast::Kind::Neg:
            out += '-';
            print_node(n->lhs, out, precedence(Ast::Kind::Neg), false);
            break;
        case Ast::Kind::Add:
            print_node(n->lhs, out, 1, false);
            out += '+';
            print_node(n->rhs, out, 1, true);
            break;
        case Ast::Kind::Sub:
            print_node(n->lhs, out, 1, false);
            out += '-';
            print_node(n->rhs, out, 1, true);
            break;
        case Ast::Kind::Mul:
            print_node(n->lhs, out, 2, false);
            out += '*';
            print_node(n->rhs, out, 2, true);
            break;
        case Ast::Kind::Div:
            print_node(n->lhs, out, 2, false);
            out += '/';
            print_node(n->rhs, out, 2, true);
            break;
        case Ast::Kind::Exp:
            out += "exp(";
            print_node(n->lhs, out, 0, false);
            out += ')';
            break;
        case Ast::Kind::Compose:
            out += "compose(";
            print_node(n->lhs, out, 0, false);
            out += ',';
            print_node(n->rhs, out, 0, false);
            out += ')';
            break;
        case Ast::Kind::MobiusCall:
            out += "mobius(";
            for (int k = 0; k < 4; ++k) {
                if (k > 0) out += ',';
                out += format_complex_arg(n->mobius[k]);
            }
            out += ')';
            break;
    }
    if (need_parens) out += ')';
}

}  // namespace

SymbolExpr parse_expression(const std::string& text) {
    Parser p(text);
    AstPtr ast = p.parse_expr();
    if (!p.eof()) throw SyntaxError("trailing input", p.pos);
    return SymbolExpr{text, ast};
}

std::string print_expression(const AstPtr& ast) {
    std::string out;
    print_node(ast, out, 0, false);
    return out;
}

bool ast_equal(const AstPtr& a, const AstPtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    if (a->kind == Ast::Kind::Number)
        return a->value == b->value && a->imaginary == b->imaginary;
    if (a->kind == Ast::Kind::MobiusCall) {
        for (int k = 0; k < 4; ++k)
            if (a->mobius[k] != b->mobius[k]) return false;
        return true;
    }
    if (a->lhs || b->lhs)
        if (!(a->lhs && b->lhs && ast_equal(a->lhs, b->lhs))) return false;
    if (a->rhs || b->rhs)
        if (!(a->rhs && b->rhs && ast_equal(a->rhs, b->rhs))) return false;
    return true;
}

AnalyticMap lower(const AstPtr& ast) {
    switch (ast->kind) {
        case Ast::Kind::Number:
            return AnalyticMap::constant(ast->imaginary ? cplx(0.0, ast->value)
                                                        : cplx(ast->value, 0.0));
        case Ast::Kind::Var: return AnalyticMap::identity();
        case Ast::Kind::Neg: return -lower(ast->lhs);
        case Ast::Kind::Add: return lower(ast->lhs) + lower(ast->rhs);
        case Ast::Kind::Sub: return lower(ast->lhs) - lower(ast->rhs);
        case Ast::Kind::Mul: return lower(ast->lhs) * lower(ast->rhs);
        case Ast::Kind::Div: return lower(ast->lhs) / lower(ast->rhs);
        case Ast::Kind::Exp: return AnalyticMap::exp_of(lower(ast->lhs));
        case Ast::Kind::Compose: return compose(lower(ast->lhs), lower(ast->rhs));
        case Ast::Kind::MobiusCall:
            return AnalyticMap::mobius(ast->mobius[0], ast->mobius[1], ast->mobius[2],
                                       ast->mobius[3]);
    }
    throw Error("lower: unreachable");
}

AnalyticMap parse_symbol(const std::string& text) {
    return lower(parse_expression(text).ast);
}

}  // namespace wco
