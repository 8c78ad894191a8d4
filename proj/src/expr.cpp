#include "lcgauss/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>

#include "lcgauss/minkowski.hpp"

namespace lcgauss {

struct Expr::Node {
    Kind kind = Kind::Constant;
    double value = 0.0;
    NamedConstant named = NamedConstant::Pi;
    Var var = Var::U;
    Func func = Func::Neg;
    BinOp op = BinOp::Add;
    std::optional<Expr> a;
    std::optional<Expr> b;
};

namespace {

struct FuncName {
    Func func;
    const char* name;
};

constexpr FuncName kFunctions[] = {
    {Func::Sin, "sin"},         {Func::Cos, "cos"},         {Func::Tan, "tan"},
    {Func::Sinh, "sinh"},       {Func::Cosh, "cosh"},       {Func::Tanh, "tanh"},
    {Func::Exp, "exp"},         {Func::Log, "log"},         {Func::Sqrt, "sqrt"},
    {Func::Arcsin, "arcsin"},   {Func::Arccos, "arccos"},   {Func::Arctan, "arctan"},
    {Func::Arcsinh, "arcsinh"}, {Func::Arccosh, "arccosh"},
};

std::optional<Func> lookup_function(std::string_view name) {
    for (const auto& f : kFunctions)
        if (name == f.name) return f.func;
    return std::nullopt;
}

char op_char(BinOp op) {
    switch (op) {
        case BinOp::Add: return '+';
        case BinOp::Sub: return '-';
        case BinOp::Mul: return '*';
        case BinOp::Div: return '/';
        case BinOp::Pow: return '^';
    }
    return '?';
}

[[noreturn]] void domain_error(const Expr& node, double arg, const char* domain) {
    throw Error(ErrorKind::DomainError, "'" + node.str() + "' evaluated at argument " + format_real(arg) +
                                            " outside domain " + domain);
}

double integer_power(double base, long long n) {
    const bool invert = n < 0;
    unsigned long long k = invert ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
    double result = 1.0;
    double sq = base;
    while (k != 0) {
        if (k & 1ULL) result *= sq;
        sq *= sq;
        k >>= 1;
    }
    return invert ? 1.0 / result : result;
}

}  // namespace

const char* to_string(Func f) {
    if (f == Func::Neg) return "neg";
    for (const auto& entry : kFunctions)
        if (entry.func == f) return entry.name;
    return "?";
}

const char* to_string(Var v) { return v == Var::U ? "u" : "v"; }

const std::vector<std::string>& known_identifiers() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out{"u", "v", "pi", "e"};
        for (const auto& f : kFunctions) out.emplace_back(f.name);
        return out;
    }();
    return names;
}

// ---------------------------------------------------------------------------
// Construction and access

Expr::Expr() {
    static const auto zero = std::make_shared<const Node>();
    node_ = zero;
}

Expr Expr::constant(double value) {
    Node n;
    n.kind = Kind::Constant;
    n.value = value;
    return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::named(NamedConstant c) {
    Node n;
    n.kind = Kind::Named;
    n.named = c;
    return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::var(Var v) {
    Node n;
    n.kind = Kind::Variable;
    n.var = v;
    return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::unary(Func f, Expr arg) {
    Node n;
    n.kind = Kind::Unary;
    n.func = f;
    n.a = std::move(arg);
    return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::binary(BinOp op, Expr lhs, Expr rhs) {
    Node n;
    n.kind = Kind::Binary;
    n.op = op;
    n.a = std::move(lhs);
    n.b = std::move(rhs);
    return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr::Kind Expr::kind() const { return node_->kind; }
double Expr::value() const { return node_->value; }
NamedConstant Expr::named_constant() const { return node_->named; }
Var Expr::variable() const { return node_->var; }
Func Expr::func() const { return node_->func; }
BinOp Expr::op() const { return node_->op; }
const Expr& Expr::arg() const { return *node_->a; }
const Expr& Expr::rhs() const { return *node_->b; }

Expr pow(Expr base, Expr exponent) { return Expr::binary(BinOp::Pow, std::move(base), std::move(exponent)); }
Expr apply(Func f, Expr arg) { return Expr::unary(f, std::move(arg)); }

bool Expr::depends_on(Var v) const {
    switch (kind()) {
        case Kind::Constant:
        case Kind::Named: return false;
        case Kind::Variable: return variable() == v;
        case Kind::Unary: return arg().depends_on(v);
        case Kind::Binary: return arg().depends_on(v) || rhs().depends_on(v);
    }
    return false;
}

std::size_t Expr::node_count() const {
    switch (kind()) {
        case Kind::Unary: return 1 + arg().node_count();
        case Kind::Binary: return 1 + arg().node_count() + rhs().node_count();
        default: return 1;
    }
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Expr::Kind::Constant: return a.value() == b.value();
        case Expr::Kind::Named: return a.named_constant() == b.named_constant();
        case Expr::Kind::Variable: return a.variable() == b.variable();
        case Expr::Kind::Unary: return a.func() == b.func() && a.arg() == b.arg();
        case Expr::Kind::Binary: return a.op() == b.op() && a.arg() == b.arg() && a.rhs() == b.rhs();
    }
    return false;
}

// ---------------------------------------------------------------------------
// Printing

std::string Expr::str() const {
    switch (kind()) {
        case Kind::Constant: {
            const double c = value();
            if (std::signbit(c)) return "(-" + format_real(-c) + ")";
            return format_real(c);
        }
        case Kind::Named: return named_constant() == NamedConstant::Pi ? "pi" : "e";
        case Kind::Variable: return to_string(variable());
        case Kind::Unary:
            if (func() == Func::Neg) return "(-(" + arg().str() + "))";
            return std::string(to_string(func())) + "(" + arg().str() + ")";
        case Kind::Binary: return "(" + arg().str() + op_char(op()) + rhs().str() + ")";
    }
    return "";
}

// ---------------------------------------------------------------------------
// Evaluation

double Expr::eval(double u, double v) const {
    double result = 0.0;
    switch (kind()) {
        case Kind::Constant: return value();
        case Kind::Named: return named_constant() == NamedConstant::Pi ? std::numbers::pi : std::numbers::e;
        case Kind::Variable: return variable() == Var::U ? u : v;
        case Kind::Unary: {
            const double x = arg().eval(u, v);
            switch (func()) {
                case Func::Neg: result = -x; break;
                case Func::Sin: result = std::sin(x); break;
                case Func::Cos: result = std::cos(x); break;
                case Func::Tan: result = std::tan(x); break;
                case Func::Sinh: result = std::sinh(x); break;
                case Func::Cosh: result = std::cosh(x); break;
                case Func::Tanh: result = std::tanh(x); break;
                case Func::Exp: result = std::exp(x); break;
                case Func::Log:
                    if (!(x > 0.0)) domain_error(*this, x, "x > 0");
                    result = std::log(x);
                    break;
                case Func::Sqrt:
                    if (!(x >= 0.0)) domain_error(*this, x, "x >= 0");
                    result = std::sqrt(x);
                    break;
                case Func::Arcsin:
                    if (!(std::abs(x) <= 1.0)) domain_error(*this, x, "|x| <= 1");
                    result = std::asin(x);
                    break;
                case Func::Arccos:
                    if (!(std::abs(x) <= 1.0)) domain_error(*this, x, "|x| <= 1");
                    result = std::acos(x);
                    break;
                case Func::Arctan: result = std::atan(x); break;
                case Func::Arcsinh: result = std::asinh(x); break;
                case Func::Arccosh:
                    if (!(x >= 1.0)) domain_error(*this, x, "x >= 1");
                    result = std::acosh(x);
                    break;
            }
            if (!std::isfinite(result)) domain_error(*this, x, "with finite result");
            return result;
        }
        case Kind::Binary: {
            const double x = arg().eval(u, v);
            const double y = rhs().eval(u, v);
            switch (op()) {
                case BinOp::Add: result = x + y; break;
                case BinOp::Sub: result = x - y; break;
                case BinOp::Mul: result = x * y; break;
                case BinOp::Div:
                    if (y == 0.0) domain_error(*this, y, "divisor != 0");
                    result = x / y;
                    break;
                case BinOp::Pow:
                    if (y == std::trunc(y) && std::abs(y) <= 1e9) {
                        if (x == 0.0 && y < 0.0) domain_error(*this, x, "base != 0 for negative exponent");
                        result = integer_power(x, static_cast<long long>(y));
                    } else {
                        if (!(x > 0.0)) domain_error(*this, x, "base > 0 for non-integer exponent");
                        result = std::pow(x, y);
                    }
                    break;
            }
            if (!std::isfinite(result)) domain_error(*this, x, "with finite result");
            return result;
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind = Tok::End;
    std::size_t offset = 0;
    std::string_view text;
    double number = 0.0;
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : src_(s) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        std::size_t i = 0;
        while (true) {
            while (i < src_.size() && std::isspace(static_cast<unsigned char>(src_[i]))) ++i;
            if (i >= src_.size()) {
                out.push_back({Tok::End, src_.size(), {}, 0.0});
                return out;
            }
            const char c = src_[i];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                out.push_back(number(i));
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                const std::size_t start = i;
                while (i < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[i])) || src_[i] == '_'))
                    ++i;
                out.push_back({Tok::Ident, start, src_.substr(start, i - start), 0.0});
                continue;
            }
            Tok kind;
            switch (c) {
                case '+': kind = Tok::Plus; break;
                case '-': kind = Tok::Minus; break;
                case '*': kind = Tok::Star; break;
                case '/': kind = Tok::Slash; break;
                case '^': kind = Tok::Caret; break;
                case '(': kind = Tok::LParen; break;
                case ')': kind = Tok::RParen; break;
                default:
                    throw ParseError(i, std::string("unexpected character '") + c + "'",
                                     {"number", "identifier", "(", "-"});
            }
            out.push_back({kind, i, src_.substr(i, 1), 0.0});
            ++i;
        }
    }

private:
    Token number(std::size_t& i) {
        const std::size_t start = i;
        auto digits = [&] {
            std::size_t n = 0;
            while (i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]))) {
                ++i;
                ++n;
            }
            return n;
        };
        std::size_t mantissa = digits();
        if (i < src_.size() && src_[i] == '.') {
            ++i;
            mantissa += digits();
        }
        if (mantissa == 0) throw ParseError(start, "malformed number", {"digit"});
        if (i < src_.size() && (src_[i] == 'e' || src_[i] == 'E')) {
            std::size_t j = i + 1;
            if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
            if (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) {
                i = j;
                digits();
            }
        }
        const std::string_view text = src_.substr(start, i - start);
        double value = 0.0;
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value))
            throw ParseError(start, "malformed number '" + std::string(text) + "'", {"number"});
        return {Tok::Number, start, text, value};
    }

    std::string_view src_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

    Expr run() {
        Expr e = expr();
        if (peek().kind != Tok::End)
            throw ParseError(peek().offset, "unexpected token '" + std::string(peek().text) + "'",
                             {"+", "-", "*", "/", "^", "end of input"});
        return e;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    void expect(Tok kind, const char* what) {
        if (peek().kind != kind) {
            const std::string found = peek().kind == Tok::End ? "end of input" : std::string(peek().text);
            throw ParseError(peek().offset, std::string("expected '") + what + "', found " + found, {what});
        }
        next();
    }

    Expr expr() {
        Expr lhs = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const BinOp op = next().kind == Tok::Plus ? BinOp::Add : BinOp::Sub;
            lhs = Expr::binary(op, lhs, term());
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = unary();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const BinOp op = next().kind == Tok::Star ? BinOp::Mul : BinOp::Div;
            lhs = Expr::binary(op, lhs, unary());
        }
        return lhs;
    }

    Expr unary() {
        if (peek().kind == Tok::Minus) {
            if (peek(1).kind == Tok::Number && peek(2).kind != Tok::Caret) {
                next();
                return Expr::constant(-next().number);
            }
            next();
            return Expr::unary(Func::Neg, unary());
        }
        return power();
    }

    Expr power() {
        Expr b = base();
        if (peek().kind == Tok::Caret) {
            next();
            return pow(b, unary());
        }
        return b;
    }

    Expr base() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number: next(); return Expr::constant(t.number);
            case Tok::LParen: {
                next();
                Expr inner = expr();
                expect(Tok::RParen, ")");
                return inner;
            }
            case Tok::Ident: return identifier();
            default: {
                const std::string found = t.kind == Tok::End ? "end of input" : "'" + std::string(t.text) + "'";
                throw ParseError(t.offset, "expected an operand, found " + found,
                                 {"number", "identifier", "(", "-"});
            }
        }
    }

    Expr identifier() {
        const Token t = next();
        if (auto f = lookup_function(t.text)) {
            if (peek().kind != Tok::LParen)
                throw ParseError(peek().offset,
                                 "function '" + std::string(t.text) + "' requires a parenthesized argument",
                                 {"("});
            next();
            Expr arg = expr();
            expect(Tok::RParen, ")");
            return Expr::unary(*f, arg);
        }
        if (t.text == "u") return Expr::var(Var::U);
        if (t.text == "v") return Expr::var(Var::V);
        if (t.text == "pi") return Expr::named(NamedConstant::Pi);
        if (t.text == "e") return Expr::named(NamedConstant::E);
        std::string known;
        for (const auto& n : known_identifiers()) known += (known.empty() ? "" : ", ") + n;
        throw ParseError(t.offset, "unknown identifier '" + std::string(t.text) + "' (known: " + known + ")",
                         known_identifiers());
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Simplification

namespace {

std::optional<double> try_fold(const Expr& e) {
    try {
        const double value = e.eval(0.0, 0.0);
        if (std::isfinite(value)) return value;
    } catch (const Error&) {
    }
    return std::nullopt;
}

Expr simplify_node(const Expr& e) {
    using K = Expr::Kind;
    if (e.kind() == K::Unary) {
        const Expr a = e.arg();
        if (e.func() == Func::Neg) {
            if (a.kind() == K::Unary && a.func() == Func::Neg) return a.arg();
            if (a.kind() == K::Constant) return Expr::constant(-a.value());
            return e;
        }
        if (a.kind() == K::Constant)
            if (auto folded = try_fold(e)) return Expr::constant(*folded);
        return e;
    }
    if (e.kind() != K::Binary) return e;

    const Expr a = e.arg();
    const Expr b = e.rhs();
    if (a.kind() == K::Constant && b.kind() == K::Constant)
        if (auto folded = try_fold(e)) return Expr::constant(*folded);

    switch (e.op()) {
        case BinOp::Add:
            if (a.is_constant(0.0)) return b;
            if (b.is_constant(0.0)) return a;
            break;
        case BinOp::Sub:
            if (b.is_constant(0.0)) return a;
            if (a.is_constant(0.0)) return simplify_node(-b);
            break;
        case BinOp::Mul:
            if (a.is_constant(0.0) || b.is_constant(0.0)) return Expr::constant(0.0);
            if (a.is_constant(1.0)) return b;
            if (b.is_constant(1.0)) return a;
            if (a.is_constant(-1.0)) return simplify_node(-b);
            if (b.is_constant(-1.0)) return simplify_node(-a);
            break;
        case BinOp::Div:
            if (b.is_constant(1.0)) return a;
            if (a.is_constant(0.0)) return Expr::constant(0.0);
            break;
        case BinOp::Pow:
            if (b.is_constant(1.0)) return a;
            if (b.is_constant(0.0) || a.is_constant(1.0)) return Expr::constant(1.0);
            break;
    }
    return e;
}

}  // namespace

Expr simplify(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::Unary: return simplify_node(Expr::unary(e.func(), simplify(e.arg())));
        case Expr::Kind::Binary:
            return simplify_node(Expr::binary(e.op(), simplify(e.arg()), simplify(e.rhs())));
        default: return e;
    }
}

// ---------------------------------------------------------------------------
// Differentiation

namespace {

Expr c(double value) { return Expr::constant(value); }

Expr derive(const Expr& e, Var x) {
    using K = Expr::Kind;
    switch (e.kind()) {
        case K::Constant:
        case K::Named: return c(0.0);
        case K::Variable: return c(e.variable() == x ? 1.0 : 0.0);
        case K::Unary: {
            const Expr& a = e.arg();
            if (!a.depends_on(x)) return c(0.0);
            const Expr da = derive(a, x);
            switch (e.func()) {
                case Func::Neg: return -da;
                case Func::Sin: return apply(Func::Cos, a) * da;
                case Func::Cos: return -(apply(Func::Sin, a) * da);
                case Func::Tan: return da / pow(apply(Func::Cos, a), c(2.0));
                case Func::Sinh: return apply(Func::Cosh, a) * da;
                case Func::Cosh: return apply(Func::Sinh, a) * da;
                case Func::Tanh: return da / pow(apply(Func::Cosh, a), c(2.0));
                case Func::Exp: return e * da;
                case Func::Log: return da / a;
                case Func::Sqrt: return da / (c(2.0) * e);
                case Func::Arcsin: return da / apply(Func::Sqrt, c(1.0) - pow(a, c(2.0)));
                case Func::Arccos: return -(da / apply(Func::Sqrt, c(1.0) - pow(a, c(2.0))));
                case Func::Arctan: return da / (c(1.0) + pow(a, c(2.0)));
                case Func::Arcsinh: return da / apply(Func::Sqrt, pow(a, c(2.0)) + c(1.0));
                case Func::Arccosh: return da / apply(Func::Sqrt, pow(a, c(2.0)) - c(1.0));
            }
            return c(0.0);
        }
        case K::Binary: {
            const Expr& a = e.arg();
            const Expr& b = e.rhs();
            const bool da_nonzero = a.depends_on(x);
            const bool db_nonzero = b.depends_on(x);
            if (!da_nonzero && !db_nonzero) return c(0.0);
            const Expr da = derive(a, x);
            const Expr db = derive(b, x);
            switch (e.op()) {
                case BinOp::Add: return da + db;
                case BinOp::Sub: return da - db;
                case BinOp::Mul: return da * b + a * db;
                case BinOp::Div:
                    if (!db_nonzero) return da / b;
                    return (da * b - a * db) / pow(b, c(2.0));
                case BinOp::Pow:
                    if (!db_nonzero) return b * pow(a, b - c(1.0)) * da;
                    if (!da_nonzero) return e * apply(Func::Log, a) * db;
                    return e * (db * apply(Func::Log, a) + b * da / a);
            }
            return c(0.0);
        }
    }
    return c(0.0);
}

}  // namespace

Expr differentiate(const Expr& e, Var var) { return simplify(derive(e, var)); }

}  // namespace lcgauss
