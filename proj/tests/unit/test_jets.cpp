#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "screw/errors.hpp"
#include "screw/expr.hpp"
#include "screw/zeros.hpp"
#include "support.hpp"

using namespace screw;

namespace {

Jet lift_text(const char* text, double u0, int order) { return jet_lift(parse_expr(text), u0, order); }

void expect_coeffs(const Jet& j, std::initializer_list<double> want, double tol = 1e-14) {
    int k = 0;
    for (double w : want) {
        EXPECT_NEAR(j.coeff(k), w, tol) << "coefficient " << k;
        ++k;
    }
}

}  // namespace

TEST(JetLift, SquareAtZero) { expect_coeffs(lift_text("u^2", 0.0, 3), {0, 0, 1, 0}); }

TEST(JetLift, SineMaclaurin) {
    expect_coeffs(lift_text("sin(u)", 0.0, 5), {0, 1, 0, -1.0 / 6, 0, 1.0 / 120});
}

TEST(JetLift, RadicalOfProfileSpeed) { expect_coeffs(lift_text("sqrt(1+4*u^2)", 0.0, 2), {1, 0, 2}); }

TEST(JetLift, OrderBoundsEnforced) {
    EXPECT_THROW(lift_text("u", 0.0, 0), OrderOutOfRange);
    EXPECT_THROW(lift_text("u", 0.0, 7), OrderOutOfRange);
    EXPECT_NO_THROW(lift_text("u", 0.0, 6));
}

TEST(JetLift, DivisionByVanishing) {
    EXPECT_THROW(lift_text("1/u", 0.0, 2), DivisionByVanishing);
    EXPECT_THROW(lift_text("sqrt(u^2)", 0.0, 2), SqrtOfVanishing);
    EXPECT_THROW(lift_text("sqrt(u - 1)", 0.0, 2), DomainError);
}

TEST(JetLift, IntegerPowerOfVanishingBase) {
    expect_coeffs(lift_text("u^3", 0.0, 4), {0, 0, 0, 1, 0});
    expect_coeffs(lift_text("(2*u)^-1", 1.0, 2), {0.5, -0.5, 0.5});
}

TEST(JetLift, RealPower) {
    // (1 + u)^(1/2) = 1 + u/2 - u^2/8 + u^3/16.
    expect_coeffs(lift_text("(1+u)^0.5", 0.0, 3), {1, 0.5, -0.125, 0.0625});
}

TEST(JetProperty, LeibnizOnRandomCubics) {
    auto rng = support::make_rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const double u0 = support::uniform(rng, -1, 1);
        std::vector<double> p(4), q(4);
        for (auto& c : p) c = support::uniform(rng, -2, 2);
        for (auto& c : q) c = support::uniform(rng, -2, 2);
        const Jet P = support::polynomial_function(support::coefficient_jet(p, 6)).jet(u0, 6);
        const Jet Q = support::polynomial_function(support::coefficient_jet(q, 6)).jet(u0, 6);
        const Jet PQ = P * Q;
        std::vector<double> prod(7, 0.0);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) prod[i + j] += p[i] * q[j];
        const Jet direct = support::polynomial_function(Jet(0.0, prod)).jet(u0, 6);
        for (int k = 0; k <= 6; ++k) {
            EXPECT_LE(support::rel_err(PQ[k], direct[k]), 1e-14 * 16) << "k=" << k;
        }
    }
}

TEST(JetProperty, PythagoreanIdentity) {
    for (double u0 : {-2.0, -0.3, 0.0, 0.7, 3.0}) {
        const Jet j = lift_text("sin(u)^2 + cos(u)^2", u0, 6);
        EXPECT_NEAR(j[0], 1.0, 1e-14);
        for (int k = 1; k <= 6; ++k) EXPECT_NEAR(j[k], 0.0, 1e-14) << "k=" << k;
    }
}

TEST(JetProperty, AgreesWithCentralDifferences) {
    const char* exprs[] = {"sin(u)*cos(2*u) + u^3", "sqrt(1 + 4*u^2)", "1/(2 + u^2)",
                           "-(2 + 3*u)/sqrt(8 + 12*u + 9*u^2)"};
    const double h = 1e-4;
    for (const char* text : exprs) {
        const Expr e = parse_expr(text);
        for (double u0 : {-0.8, 0.1, 0.6}) {
            const Jet j = jet_lift(e, u0, 3);
            auto f = [&](double u) { return e.evaluate(u); };
            const double d1 = (f(u0 + h) - f(u0 - h)) / (2 * h);
            const double d2 = (f(u0 + h) - 2 * f(u0) + f(u0 - h)) / (h * h);
            const double t = 1e-3;  // wider step: the third difference amplifies rounding
            const double d3 =
                (f(u0 + 2 * t) - 2 * f(u0 + t) + 2 * f(u0 - t) - f(u0 - 2 * t)) / (2 * t * t * t);
            EXPECT_LE(support::rel_err(j.derivative(1), d1), 1e-6) << text;
            EXPECT_LE(support::rel_err(j.derivative(2), d2), 1e-6) << text;
            EXPECT_LE(support::rel_err(j.derivative(3), d3), 1e-6 * 100) << text;
        }
    }
}

TEST(JetOps, DerivativeIsFactorialScaled) {
    const Jet j = lift_text("u^4", 1.0, 4);
    EXPECT_DOUBLE_EQ(j.derivative(4), 24.0);
    EXPECT_DOUBLE_EQ(j.coeff(4), 1.0);
    EXPECT_THROW(j.coeff(5), OrderOutOfRange);
}

TEST(JetOps, ShiftReexpandsPolynomial) {
    const Jet p(0.0, std::vector<double>{1, 2, 3});  // 1 + 2u + 3u^2
    const Jet s = p.shifted(1.0);
    EXPECT_DOUBLE_EQ(s.base_point(), 1.0);
    expect_coeffs(s, {6, 8, 3});
}

TEST(JetOps, DeflationRemovesFactor) {
    const Jet j = lift_text("u^2*(1 + u)", 0.0, 5);
    EXPECT_EQ(j.vanishing_order(1e-12), 2);
    const Jet d = j.deflated(2);
    EXPECT_EQ(d.order(), 3);
    expect_coeffs(d, {1, 1, 0, 0});
}

TEST(JetOps, IntegrationInvertsDifferentiation) {
    const Jet j = lift_text("cos(u)", 0.4, 5);
    const Jet back = j.differentiated().integrated(j.value());
    for (int k = 0; k < 5; ++k) EXPECT_NEAR(back[k], j[k], 1e-15);
}

TEST(JetOps, ScaledArgument) {
    const Jet j = lift_text("u^2", 0.0, 2).scaled_argument(3.0);
    expect_coeffs(j, {0, 0, 9});
}

TEST(Parser, GrammarAndPrecedence) {
    EXPECT_DOUBLE_EQ(parse_expr("-u^2").evaluate(3.0), -9.0);
    EXPECT_DOUBLE_EQ(parse_expr("2^3^2").evaluate(0.0), 512.0);
    EXPECT_DOUBLE_EQ(parse_expr("u**2").evaluate(3.0), 9.0);
    EXPECT_DOUBLE_EQ(parse_expr("2*(u + 1)/4").evaluate(1.0), 1.0);
    EXPECT_NEAR(parse_expr("cos(pi)").evaluate(0.0), -1.0, 1e-15);
    EXPECT_DOUBLE_EQ(parse_expr("1.5e1").evaluate(0.0), 15.0);
}

TEST(Parser, ErrorsCitePosition) {
    try {
        parse_expr("u + * 2");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(parse_expr("sin(u"), ParseError);
    EXPECT_THROW(parse_expr("foo(u)"), ParseError);
    EXPECT_THROW(parse_expr("u^u"), ParseError);
    EXPECT_THROW(parse_expr(""), ParseError);
}

TEST(ScalarFunctionTest, OrderLimit) {
    const ScalarFunction f = ScalarFunction::parse("u^2");
    EXPECT_EQ(f.jet(0.0, 24).order(), 24);
    const ScalarFunction c = support::polynomial_function(Jet(0.0, std::vector<double>{1, 1}));
    EXPECT_THROW(c.jet(0.0, 2), JetOrderTooLow);
}

TEST(Zeros, SimpleAndMultiple) {
    const auto z = find_zeros(ScalarFunction::parse("(u - 0.25)*(u + 0.5)^2"), {-1, 1}, 200);
    ASSERT_EQ(z.size(), 2u);
    EXPECT_NEAR(z[0].u, -0.5, 1e-9);
    EXPECT_EQ(z[0].multiplicity, 2);
    EXPECT_NEAR(z[1].u, 0.25, 1e-12);
    EXPECT_EQ(z[1].multiplicity, 1);
}

TEST(Zeros, NoneForPositiveFunction) {
    EXPECT_TRUE(find_zeros(ScalarFunction::parse("1 + u^2"), {-1, 1}, 64).empty());
}
