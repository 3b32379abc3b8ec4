#pragma once

#include <array>
#include <string>
#include <vector>

#include "screw/expr.hpp"
#include "screw/zeros.hpp"

namespace screw {

using Vec2 = std::array<double, 2>;

// Plane frontal gamma = (x, z) with unit normal nu = (a, b).
struct LegendreCurve {
    ScalarFunction x, z, a, b;
    Interval domain{-1.0, 1.0};

    static LegendreCurve from_strings(const std::string& x, const std::string& z,
                                      const std::string& a, const std::string& b,
                                      Interval domain);
};

// ell = nu' . mu and beta = gamma' . mu with mu = (-b, a).
struct LegendreCurvature {
    ScalarFunction ell, beta;
};

struct LegendreReport {
    double max_norm_deviation = 0.0;     // max | |nu| - 1 |
    double max_tangency_deviation = 0.0; // max | gamma' . nu |
    bool valid() const { return max_norm_deviation < 1e-9 && max_tangency_deviation < 1e-9; }
};

LegendreReport legendre_check(const LegendreCurve& curve, const std::vector<double>& grid);
std::vector<double> uniform_grid(Interval range, int n_points);

// Curvature functions; their order-n jets draw on order-(n+1) jets of the curve.
LegendreCurvature curvature_functions(const LegendreCurve& curve);

struct CurvatureAt {
    double ell = 0.0;
    double beta = 0.0;
    Jet ell_jet;   // order 4
    Jet beta_jet;  // order 4
};

CurvatureAt curvature_of_legendre(const LegendreCurve& curve, double u0);

// Rigid motion: gamma -> R(angle) gamma + shift, nu -> R(angle) nu.
LegendreCurve transformed(const LegendreCurve& curve, double angle, Vec2 shift);

struct ReconstructionInit {
    double u0 = 0.0;
    Vec2 gamma0{0.0, 0.0};
    double angle0 = 0.0;  // nu(u0) = (cos angle0, sin angle0)
};

// Nodes of a reconstructed curve with the Frenet data needed for Hermite
// interpolation: gamma' = beta mu and nu' = ell mu at every node.
struct SampledCurve {
    std::vector<double> u, x, z, theta, ell, beta;

    std::size_t size() const { return u.size(); }
    Vec2 nu(std::size_t i) const;
    // Piecewise-cubic Hermite interpolant; jets available to order 3.
    LegendreCurve interpolated() const;
    // Same base values, but derivatives of every order come from the
    // curvature the nodes were integrated from.
    LegendreCurve interpolated(const LegendreCurvature& curvature) const;
};

SampledCurve reconstruct_curve(const LegendreCurvature& curvature, const ReconstructionInit& init,
                               Interval range, int n_steps);

// Exact Taylor germ of the reconstructed curve at init.u0.
struct CurveGerm {
    Jet x, z, a, b, theta;
};

CurveGerm reconstruct_jets(const Jet& ell, const Jet& beta, const ReconstructionInit& init);

}  // namespace screw
