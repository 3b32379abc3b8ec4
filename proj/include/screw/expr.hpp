#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "screw/jet.hpp"

namespace screw {

enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Sqrt, Sin, Cos };

// Immutable expression tree in the single variable u.
class Expr {
public:
    struct Node;

    Expr();  // the constant 0
    static Expr constant(double c);
    static Expr variable();

    Op op() const;
    double value_if_constant() const;
    bool depends_on_u() const;
    const Expr& lhs() const;
    const Expr& rhs() const;

    double evaluate(double u) const;
    std::string to_string() const;

    friend Expr make_unary(Op op, Expr a);
    friend Expr make_binary(Op op, Expr a, Expr b);

private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

Expr make_unary(Op op, Expr a);
// Pow requires b to be free of u.
Expr make_binary(Op op, Expr a, Expr b);

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);
Expr pow(Expr a, Expr b);
Expr sqrt(Expr a);
Expr sin(Expr a);
Expr cos(Expr a);

// Grammar: sums of products of signed powers of primaries; primaries are
// numbers, u, pi, sqrt/sin/cos calls and parenthesised expressions.
// '^' and '**' are right-associative and bind tighter than unary minus.
Expr parse_expr(std::string_view text);

// Taylor jet of expr at u0; order must lie in 1..kMaxOrder.
Jet jet_lift(const Expr& expr, double u0, int order);
// Same without the public order bound (0..kJetCapacity).
Jet lift(const Expr& expr, double u0, int order);

// Function of u that can produce its own jets up to max_order.
class ScalarFunction {
public:
    using JetFn = std::function<Jet(double u, int order)>;

    ScalarFunction() = default;
    ScalarFunction(JetFn fn, int max_order);

    static ScalarFunction from_expr(const Expr& expr);
    static ScalarFunction parse(std::string_view text);
    static ScalarFunction constant(double c);

    Jet jet(double u, int order) const;
    double operator()(double u) const { return jet(u, 0).value(); }
    int max_order() const { return max_order_; }
    explicit operator bool() const { return static_cast<bool>(fn_); }

private:
    JetFn fn_;
    int max_order_ = 0;
};

}  // namespace screw
