#pragma once

#include <memory>
#include <string>

#include "wco/analytic_map.hpp"

namespace wco {

// Expression tree for the symbol mini-language. Grammar (infix, standard
// precedence):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom
//   atom   := number | 'z' | '(' expr ')' | 'exp' '(' expr ')'
//           | 'compose' '(' expr ',' expr ')' | 'mobius' '(' n,n,n,n ')'
//   number := decimal real, optional trailing 'i'; bare 'i' is the unit.
struct Ast {
    enum class Kind { Number, Var, Neg, Add, Sub, Mul, Div, Exp, Compose, MobiusCall };
    Kind kind = Kind::Var;
    double value = 0.0;   // Number: magnitude
    bool imaginary = false;  // Number: trailing 'i'
    cplx mobius[4] = {};  // MobiusCall
    std::shared_ptr<const Ast> lhs, rhs;
};

using AstPtr = std::shared_ptr<const Ast>;

struct SymbolExpr {
    std::string source;
    AstPtr ast;
};

// Throws SyntaxError with offset on malformed input.
SymbolExpr parse_expression(const std::string& text);

// Canonical text form; parse(print(ast)) is structurally identical to ast.
std::string print_expression(const AstPtr& ast);

bool ast_equal(const AstPtr& a, const AstPtr& b);

// Lower an AST to an evaluable map. Throws DivisionByZeroStructure when a
// denominator is identically zero.
AnalyticMap lower(const AstPtr& ast);

AnalyticMap parse_symbol(const std::string& text);

}  // namespace wco
