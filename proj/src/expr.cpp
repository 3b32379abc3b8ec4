#include "screw/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "screw/errors.hpp"

namespace screw {

struct Expr::Node {
    Op op = Op::Const;
    double value = 0.0;
    bool has_u = false;
    // Leaves hold empty children.
    Expr a{std::shared_ptr<const Node>()};
    Expr b{std::shared_ptr<const Node>()};
};

Expr::Expr() : node_(std::make_shared<Node>()) {}

Expr Expr::constant(double c) {
    auto n = std::make_shared<Node>();
    n->value = c;
    return Expr(n);
}

Expr Expr::variable() {
    auto n = std::make_shared<Node>();
    n->op = Op::Var;
    n->has_u = true;
    return Expr(n);
}

Op Expr::op() const { return node_->op; }
bool Expr::depends_on_u() const { return node_->has_u; }
const Expr& Expr::lhs() const { return node_->a; }
const Expr& Expr::rhs() const { return node_->b; }

double Expr::value_if_constant() const { return evaluate(0.0); }

Expr make_unary(Op op, Expr a) {
    auto n = std::make_shared<Expr::Node>();
    n->op = op;
    n->has_u = a.depends_on_u();
    n->a = std::move(a);
    return Expr(n);
}

Expr make_binary(Op op, Expr a, Expr b) {
    if (op == Op::Pow && b.depends_on_u()) {
        throw DomainError("exponent must not depend on u");
    }
    auto n = std::make_shared<Expr::Node>();
    n->op = op;
    n->has_u = a.depends_on_u() || b.depends_on_u();
    n->a = std::move(a);
    n->b = std::move(b);
    return Expr(n);
}

Expr operator+(Expr a, Expr b) { return make_binary(Op::Add, std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return make_binary(Op::Sub, std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return make_binary(Op::Mul, std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return make_binary(Op::Div, std::move(a), std::move(b)); }
Expr operator-(Expr a) { return make_unary(Op::Neg, std::move(a)); }
Expr pow(Expr a, Expr b) { return make_binary(Op::Pow, std::move(a), std::move(b)); }
Expr sqrt(Expr a) { return make_unary(Op::Sqrt, std::move(a)); }
Expr sin(Expr a) { return make_unary(Op::Sin, std::move(a)); }
Expr cos(Expr a) { return make_unary(Op::Cos, std::move(a)); }

double Expr::evaluate(double u) const {
    const Node& n = *node_;
    switch (n.op) {
        case Op::Const: return n.value;
        case Op::Var: return u;
        case Op::Add: return n.a.evaluate(u) + n.b.evaluate(u);
        case Op::Sub: return n.a.evaluate(u) - n.b.evaluate(u);
        case Op::Mul: return n.a.evaluate(u) * n.b.evaluate(u);
        case Op::Div: return n.a.evaluate(u) / n.b.evaluate(u);
        case Op::Neg: return -n.a.evaluate(u);
        case Op::Pow: return std::pow(n.a.evaluate(u), n.b.evaluate(u));
        case Op::Sqrt: return std::sqrt(n.a.evaluate(u));
        case Op::Sin: return std::sin(n.a.evaluate(u));
        case Op::Cos: return std::cos(n.a.evaluate(u));
    }
    return 0.0;
}

std::string Expr::to_string() const {
    const Node& n = *node_;
    auto bin = [&](const char* sym) {
        return "(" + n.a.to_string() + sym + n.b.to_string() + ")";
    };
    switch (n.op) {
        case Op::Const: {
            std::ostringstream os;
            os.precision(17);
            os << n.value;
            return os.str();
        }
        case Op::Var: return "u";
        case Op::Add: return bin(" + ");
        case Op::Sub: return bin(" - ");
        case Op::Mul: return bin("*");
        case Op::Div: return bin("/");
        case Op::Neg: return "(-" + n.a.to_string() + ")";
        case Op::Pow: return bin("^");
        case Op::Sqrt: return "sqrt(" + n.a.to_string() + ")";
        case Op::Sin: return "sin(" + n.a.to_string() + ")";
        case Op::Cos: return "cos(" + n.a.to_string() + ")";
    }
    return {};
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Expr parse() {
        Expr e = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(std::string_view tok) {
        skip();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    Expr sum() {
        Expr e = product();
        for (;;) {
            if (accept("+")) {
                e = std::move(e) + product();
            } else if (accept("-")) {
                e = std::move(e) - product();
            } else {
                return e;
            }
        }
    }

    Expr product() {
        Expr e = unary();
        for (;;) {
            skip();
            if (s_.substr(pos_, 2) == "**") return e;
            if (accept("*")) {
                e = std::move(e) * unary();
            } else if (accept("/")) {
                e = std::move(e) / unary();
            } else {
                return e;
            }
        }
    }

    Expr unary() {
        if (accept("-")) return -unary();
        if (accept("+")) return unary();
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (accept("^") || accept("**")) {
            const std::size_t at = pos_;
            Expr exponent = unary();
            if (exponent.depends_on_u()) {
                throw ParseError("exponent must not depend on u", at);
            }
            return pow(std::move(base), std::move(exponent));
        }
        return base;
    }

    Expr primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char ch = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string_view name = s_.substr(start, pos_ - start);
            if (name == "u") return Expr::variable();
            if (name == "pi") return Expr::constant(std::numbers::pi);
            Expr (*fn)(Expr) = nullptr;
            if (name == "sqrt") fn = &screw::sqrt;
            if (name == "sin") fn = &screw::sin;
            if (name == "cos") fn = &screw::cos;
            if (fn == nullptr) {
                pos_ = start;
                fail("unknown identifier '" + std::string(name) + "'");
            }
            if (!accept("(")) fail("expected '(' after " + std::string(name));
            Expr arg = sum();
            if (!accept(")")) fail("expected ')'");
            return fn(std::move(arg));
        }
        if (accept("(")) {
            Expr e = sum();
            if (!accept(")")) fail("expected ')'");
            return e;
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    Expr number() {
        const char* first = s_.data() + pos_;
        const char* last = s_.data() + s_.size();
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc()) fail("malformed number");
        pos_ += static_cast<std::size_t>(ptr - first);
        return Expr::constant(v);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

Jet lift_node(const Expr& e, double u0, int order) {
    switch (e.op()) {
        case Op::Const: return Jet::constant(e.value_if_constant(), u0, order);
        case Op::Var: return Jet::variable(u0, order);
        case Op::Add: return lift_node(e.lhs(), u0, order) + lift_node(e.rhs(), u0, order);
        case Op::Sub: return lift_node(e.lhs(), u0, order) - lift_node(e.rhs(), u0, order);
        case Op::Mul: return lift_node(e.lhs(), u0, order) * lift_node(e.rhs(), u0, order);
        case Op::Div: return lift_node(e.lhs(), u0, order) / lift_node(e.rhs(), u0, order);
        case Op::Neg: return -lift_node(e.lhs(), u0, order);
        case Op::Pow: return pow(lift_node(e.lhs(), u0, order), e.rhs().value_if_constant());
        case Op::Sqrt: return sqrt(lift_node(e.lhs(), u0, order));
        case Op::Sin: return sin(lift_node(e.lhs(), u0, order));
        case Op::Cos: return cos(lift_node(e.lhs(), u0, order));
    }
    return Jet(u0, order);
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

Jet lift(const Expr& expr, double u0, int order) {
    if (order < 0 || order > kJetCapacity) {
        throw OrderOutOfRange("order " + std::to_string(order));
    }
    return lift_node(expr, u0, order);
}

Jet jet_lift(const Expr& expr, double u0, int order) {
    if (order < 1 || order > kMaxOrder) {
        throw OrderOutOfRange("order " + std::to_string(order) + " outside 1.." +
                              std::to_string(kMaxOrder));
    }
    return lift_node(expr, u0, order);
}

ScalarFunction::ScalarFunction(JetFn fn, int max_order)
    : fn_(std::move(fn)), max_order_(max_order) {}

ScalarFunction ScalarFunction::from_expr(const Expr& expr) {
    return ScalarFunction([expr](double u, int order) { return lift(expr, u, order); },
                          kJetCapacity);
}

ScalarFunction ScalarFunction::parse(std::string_view text) {
    return from_expr(parse_expr(text));
}

ScalarFunction ScalarFunction::constant(double c) {
    return ScalarFunction([c](double u, int order) { return Jet::constant(c, u, order); },
                          kJetCapacity);
}

Jet ScalarFunction::jet(double u, int order) const {
    if (order > max_order_) {
        throw JetOrderTooLow("requested order " + std::to_string(order) +
                             ", function provides " + std::to_string(max_order_));
    }
    return fn_(u, order);
}

}  // namespace screw
