#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lcgauss/error.hpp"

namespace lcgauss {

enum class Var { U, V };

enum class Func {
    Sin, Cos, Tan, Sinh, Cosh, Tanh, Exp, Log, Sqrt,
    Arcsin, Arccos, Arctan, Arcsinh, Arccosh, Neg,
};

enum class BinOp { Add, Sub, Mul, Div, Pow };

enum class NamedConstant { Pi, E };

const char* to_string(Func f);
const char* to_string(Var v);

/// Immutable scalar expression in the variables u and v. Copies share the
/// underlying tree.
class Expr {
public:
    enum class Kind { Constant, Named, Variable, Unary, Binary };

    /// Defaults to the constant 0.
    Expr();

    static Expr constant(double value);
    static Expr named(NamedConstant c);
    static Expr var(Var v);
    static Expr unary(Func f, Expr arg);
    static Expr binary(BinOp op, Expr lhs, Expr rhs);

    Kind kind() const;
    double value() const;              // Constant
    NamedConstant named_constant() const;
    Var variable() const;
    Func func() const;                 // Unary
    BinOp op() const;                  // Binary
    const Expr& arg() const;           // Unary operand, Binary lhs
    const Expr& rhs() const;

    bool is_constant(double v) const { return kind() == Kind::Constant && value() == v; }
    bool depends_on(Var v) const;

    /// Throws DomainError naming the offending sub-expression.
    double eval(double u, double v) const;

    /// Fully parenthesized text that parses back to a structurally equal tree.
    std::string str() const;

    std::size_t node_count() const;

    friend bool operator==(const Expr& a, const Expr& b);

    friend Expr operator+(Expr a, Expr b) { return binary(BinOp::Add, std::move(a), std::move(b)); }
    friend Expr operator-(Expr a, Expr b) { return binary(BinOp::Sub, std::move(a), std::move(b)); }
    friend Expr operator*(Expr a, Expr b) { return binary(BinOp::Mul, std::move(a), std::move(b)); }
    friend Expr operator/(Expr a, Expr b) { return binary(BinOp::Div, std::move(a), std::move(b)); }
    friend Expr operator-(Expr a) { return unary(Func::Neg, std::move(a)); }

    struct Node;

private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

Expr pow(Expr base, Expr exponent);
Expr apply(Func f, Expr arg);

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& message, std::vector<std::string> expected)
        : Error(ErrorKind::ParseError, "at offset " + std::to_string(offset) + ": " + message),
          offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Grammar:
///   expr  := term (('+'|'-') term)*
///   term  := unary (('*'|'/') unary)*
///   unary := '-' unary | power
///   power := base ('^' unary)?          right associative
///   base  := NUMBER | IDENT | IDENT '(' expr ')' | '(' expr ')'
/// so that '^' binds tighter than unary minus ("-u^2" is -(u^2)). A minus
/// directly in front of a number literal that is not raised to a power is
/// folded into a negative constant.
Expr parse(std::string_view text);

/// Exact symbolic derivative, lightly simplified.
Expr differentiate(const Expr& e, Var var);

/// Local value-preserving rewrites (0+x, 1*x, 0*x, x^1, double negation) and
/// constant folding. No trigonometric identities.
Expr simplify(const Expr& e);

/// Every identifier the parser accepts.
const std::vector<std::string>& known_identifiers();

}  // namespace lcgauss
